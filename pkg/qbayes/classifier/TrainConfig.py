from typing import Any, Dict, List, Sequence, Tuple, Union

from .._exceptions import FormatError, InvalidArgumentError
from .._misc import _exact_float
from ..bayesnet._mutual_information import CMI_WEIGHTINGS
from ..preprocess.BinarizerModel import DEFAULT_SIGMA_FLOOR
from ..preprocess.FeatureSpec import FeatureSpec

NETWORK_KINDS = ('naive', 'spode', 'tan', 'symmetric')


class TrainConfig:
    """Everything that determines a trained classifier besides the data

    Args:
        network_kind (str): One of naive, spode, tan, symmetric. Defaults to naive.
        superparent (int): SPODE superparent feature. Defaults to 5, the center block of the default grid.
        tan_root (int): Root of the TAN spanning tree. Defaults to 1.
        symmetric_pairs (Union[Sequence[Tuple[int, int]], None]): Feature pairs for the symmetric network.
            None derives point-symmetric pairs from the feature spec.
        alpha (float): Laplace pseudocount for CPTs and CMI tables. Defaults to 1.
        feature_spec (Union[FeatureSpec, None]): Sampling blocks. Defaults to the 3x3 grid of 7x7 blocks.
        shots (int): Measurement shots used for predictions; 0 reads exact amplitudes. Defaults to 0.
        seed (int): Seed for shot sampling. Defaults to 0.
        cmi_weighting (str): 'joint' (standard CMI) or 'class_conditional'. Defaults to joint.
        elide_x_pairs (bool): Drop adjacent cancelling X gates from the compiled circuit. Defaults to False.
        sigma_floor (float): Lower bound on fitted standard deviations. Defaults to 1e-3.
    """
    def __init__(
        self, *,
        network_kind: str='naive',
        superparent: int=5,
        tan_root: int=1,
        symmetric_pairs: Union[Sequence[Sequence[int]], None]=None,
        alpha: float=1.0,
        feature_spec: Union[FeatureSpec, None]=None,
        shots: int=0,
        seed: int=0,
        cmi_weighting: str='joint',
        elide_x_pairs: bool=False,
        sigma_floor: float=DEFAULT_SIGMA_FLOOR
    ):
        self._network_kind = network_kind
        self._superparent = int(superparent)
        self._tan_root = int(tan_root)
        self._symmetric_pairs: Union[Tuple[Tuple[int, int], ...], None] = None if symmetric_pairs is None else tuple((int(a), int(b)) for a, b in symmetric_pairs)
        self._alpha = float(alpha)
        self._feature_spec = feature_spec if feature_spec is not None else FeatureSpec.default()
        self._shots = int(shots)
        self._seed = int(seed)
        self._cmi_weighting = cmi_weighting
        self._elide_x_pairs = bool(elide_x_pairs)
        self._sigma_floor = float(sigma_floor)
        self._check()

    @property
    def network_kind(self) -> str:
        return self._network_kind

    @property
    def superparent(self) -> int:
        return self._superparent

    @property
    def tan_root(self) -> int:
        return self._tan_root

    @property
    def symmetric_pairs(self) -> List[Tuple[int, int]]:
        """Pairs in effect: the configured ones, or those derived from the feature spec"""
        if self._symmetric_pairs is None:
            return self._feature_spec.point_symmetric_pairs()
        return list(self._symmetric_pairs)

    @property
    def alpha(self) -> float:
        return self._alpha

    @property
    def feature_spec(self) -> FeatureSpec:
        return self._feature_spec

    @property
    def n_features(self) -> int:
        return self._feature_spec.n_features

    @property
    def shots(self) -> int:
        return self._shots

    @property
    def seed(self) -> int:
        return self._seed

    @property
    def cmi_weighting(self) -> str:
        return self._cmi_weighting

    @property
    def elide_x_pairs(self) -> bool:
        return self._elide_x_pairs

    @property
    def sigma_floor(self) -> float:
        return self._sigma_floor

    def replace(self, **kwargs) -> 'TrainConfig':
        d = self._kwargs()
        for k in kwargs:
            if k not in d:
                raise InvalidArgumentError(f'Unknown training option: {k}')
        d.update(kwargs)
        return TrainConfig(**d)

    def to_dict(self) -> Dict[str, Any]:
        d = self._kwargs()
        d['alpha'] = _exact_float(self._alpha)
        d['sigma_floor'] = _exact_float(self._sigma_floor)
        d['symmetric_pairs'] = None if self._symmetric_pairs is None else [list(p) for p in self._symmetric_pairs]
        d['feature_spec'] = self._feature_spec.to_dict()
        return d

    @staticmethod
    def from_dict(x: Dict[str, Any]) -> 'TrainConfig':
        if not isinstance(x, dict):
            raise FormatError(f'Training config must be an object, got {type(x).__name__}')
        unknown = sorted(set(x.keys()) - set(TRAIN_CONFIG_KEYS))
        if len(unknown) > 0:
            raise FormatError(f'Unknown training config keys: {unknown}')
        d = dict(x)
        if d.get('feature_spec', None) is not None:
            d['feature_spec'] = FeatureSpec.from_dict(d['feature_spec'])
        try:
            return TrainConfig(**d)
        except (TypeError, ValueError) as e:
            raise FormatError(f'Invalid training config: {e}')

    def __eq__(self, other) -> bool:
        if not isinstance(other, TrainConfig):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self) -> str:
        return f'TrainConfig({self._network_kind}, alpha={self._alpha}, n_features={self.n_features}, shots={self._shots}, seed={self._seed})'

    def _kwargs(self) -> Dict[str, Any]:
        return {
            'network_kind': self._network_kind,
            'superparent': self._superparent,
            'tan_root': self._tan_root,
            'symmetric_pairs': self._symmetric_pairs,
            'alpha': self._alpha,
            'feature_spec': self._feature_spec,
            'shots': self._shots,
            'seed': self._seed,
            'cmi_weighting': self._cmi_weighting,
            'elide_x_pairs': self._elide_x_pairs,
            'sigma_floor': self._sigma_floor
        }

    def _check(self):
        n = self.n_features
        if self._network_kind not in NETWORK_KINDS:
            raise InvalidArgumentError(f'Unknown network kind: {self._network_kind} (expected one of {NETWORK_KINDS})')
        if self._network_kind == 'spode' and not (1 <= self._superparent <= n):
            raise InvalidArgumentError(f'Superparent out of range 1..{n}: {self._superparent}')
        if self._network_kind == 'tan' and not (1 <= self._tan_root <= n):
            raise InvalidArgumentError(f'TAN root out of range 1..{n}: {self._tan_root}')
        if self._alpha < 0:
            raise InvalidArgumentError(f'alpha must be nonnegative: {self._alpha}')
        if self._shots < 0:
            raise InvalidArgumentError(f'shots must be nonnegative: {self._shots}')
        if self._cmi_weighting not in CMI_WEIGHTINGS:
            raise InvalidArgumentError(f'Unknown CMI weighting: {self._cmi_weighting} (expected one of {CMI_WEIGHTINGS})')
        if self._sigma_floor <= 0:
            raise InvalidArgumentError(f'sigma_floor must be positive: {self._sigma_floor}')


TRAIN_CONFIG_KEYS = (
    'network_kind', 'superparent', 'tan_root', 'symmetric_pairs', 'alpha', 'feature_spec',
    'shots', 'seed', 'cmi_weighting', 'elide_x_pairs', 'sigma_floor'
)
