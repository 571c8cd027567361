from functools import cached_property
from typing import Any, Dict, Tuple

from ..bayesnet.BayesNet import BayesNet
from ..bayesnet.CptSet import CptSet
from ..preprocess.BinarizerModel import BinarizerModel
from ..preprocess.FeatureSpec import FeatureSpec
from ..qcircuit.Circuit import Circuit
from ..qcircuit.StateVector import StateVector
from ..qcircuit._simulate import _sample_shots, _simulate
from .TrainConfig import TrainConfig


class TrainedQbc:
    """A trained quantum Bayes classifier for one pair of classes

    class_pair holds the original labels (a, b) with a < b; a is encoded as
    y=0 and b as y=1.
    """
    def __init__(
        self, *,
        class_pair: Tuple[int, int],
        config: TrainConfig,
        binarizer: BinarizerModel,
        net: BayesNet,
        cpts: CptSet,
        circuit: Circuit,
        metadata: Dict[str, Any]
    ):
        self._class_pair = (int(class_pair[0]), int(class_pair[1]))
        self._config = config
        self._binarizer = binarizer
        self._net = net
        self._cpts = cpts
        self._circuit = circuit
        self._metadata = dict(metadata)

    @property
    def class_pair(self) -> Tuple[int, int]:
        return self._class_pair

    @property
    def config(self) -> TrainConfig:
        return self._config

    @property
    def feature_spec(self) -> FeatureSpec:
        return self._config.feature_spec

    @property
    def binarizer(self) -> BinarizerModel:
        return self._binarizer

    @property
    def net(self) -> BayesNet:
        return self._net

    @property
    def cpts(self) -> CptSet:
        return self._cpts

    @property
    def circuit(self) -> Circuit:
        return self._circuit

    @property
    def metadata(self) -> Dict[str, Any]:
        return dict(self._metadata)

    def label_of(self, bit: int) -> int:
        return self._class_pair[bit]

    def bit_of(self, label: int) -> int:
        return self._class_pair.index(label)

    @cached_property
    def state(self) -> StateVector:
        """Output state of the circuit (simulated once, on first use)"""
        return _simulate(self._circuit)

    @cached_property
    def shot_counts(self) -> Dict[int, int]:
        """Measurement histogram of `config.shots` shots drawn with `config.seed`"""
        return _sample_shots(self.state, self._config.shots, seed=self._config.seed)

    def __repr__(self) -> str:
        return f'TrainedQbc(classes={self._class_pair}, network={self._config.network_kind}, n_features={self._net.n_features})'
