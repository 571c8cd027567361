from typing import List, Tuple

import numpy as np

from .._exceptions import InvalidArgumentError
from ..bayesnet.BayesNet import BayesNet
from ..bayesnet.SampleSet import SampleSet
from ..bayesnet._estimate import _estimate_cpts
from ..bayesnet._structure import _build_naive, _build_spode, _build_symmetric, _build_tan
from ..preprocess.BinarizerModel import _binarize_many, _fit_binarizer
from ..preprocess.FeatureSpec import _pool_many
from ..preprocess.ImageDataset import ImageDataset
from ..qcircuit._compile import _compile
from ..version import __version__
from .TrainConfig import TrainConfig
from .TrainedQbc import TrainedQbc


def _normalize_class_pair(class_pair: Tuple[int, int]) -> Tuple[int, int]:
    a, b = int(class_pair[0]), int(class_pair[1])
    if a == b:
        raise InvalidArgumentError(f'The two classes must differ: ({a}, {b})')
    # the smaller original label is encoded as y=0
    return (min(a, b), max(a, b))

def _build_network(config: TrainConfig, samples: SampleSet) -> BayesNet:
    n = config.n_features
    kind = config.network_kind
    if kind == 'naive':
        return _build_naive(n)
    elif kind == 'spode':
        return _build_spode(n, config.superparent)
    elif kind == 'tan':
        return _build_tan(samples, n, root=config.tan_root, alpha=config.alpha, weighting=config.cmi_weighting)
    elif kind == 'symmetric':
        return _build_symmetric(n, config.symmetric_pairs)
    raise InvalidArgumentError(f'Unknown network kind: {kind}')

def _train(dataset: ImageDataset, class_pair: Tuple[int, int], config: TrainConfig) -> TrainedQbc:
    pair = _normalize_class_pair(class_pair)
    subset = dataset.filter(pair)
    for c in pair:
        if not np.any(subset.labels == c):
            raise InvalidArgumentError(f'Class {c} does not occur in the training data')
    y = (subset.labels == pair[1]).astype(np.uint8)
    pooled = _pool_many(subset.images, config.feature_spec)
    binarizer = _fit_binarizer(pooled[y == 0], pooled[y == 1], sigma_floor=config.sigma_floor)
    samples = SampleSet(y, _binarize_many(binarizer, pooled))
    net = _build_network(config, samples)
    cpts = _estimate_cpts(net, samples, alpha=config.alpha)
    circuit = _compile(net, cpts, elide_x_pairs=config.elide_x_pairs)

    warnings: List[str] = binarizer.warnings()
    if config.network_kind == 'tan' and net.is_naive() and config.n_features == 1:
        warnings.append('TAN structure requested for a single feature; using the naive structure')
    if len(cpts.zero_entries) > 0:
        warnings.append(f'{len(cpts.zero_entries)} CPT entries are exactly 0, 1 or unobserved (smoothing disabled)')
    metadata = {
        'qbayes_version': __version__,
        'alpha': config.alpha,
        'seed': config.seed,
        'network_kind': config.network_kind,
        'dataset_digest': subset.digest(),
        'train_counts': [int(np.sum(y == 0)), int(np.sum(y == 1))],
        'warnings': warnings
    }
    if config.network_kind == 'tan':
        metadata['tan_root'] = config.tan_root
    if config.network_kind == 'spode':
        metadata['superparent'] = config.superparent
    return TrainedQbc(
        class_pair=pair,
        config=config,
        binarizer=binarizer,
        net=net,
        cpts=cpts,
        circuit=circuit,
        metadata=metadata
    )
