from typing import List, Tuple

import numpy as np

from .._exceptions import InvalidArgumentError
from ..bayesnet._estimate import _joint_probability
from ..preprocess.BinarizerModel import _binarize_many
from ..preprocess.FeatureSpec import _pool_many
from ..qcircuit.StateVector import _basis_indices
from .LossMatrix import LossMatrix
from .TrainedQbc import TrainedQbc

Scores = Tuple[float, float]

# relative gap below which two scores (or risks) count as equal
TIE_RTOL = 1e-12


def _feature_bits(model: TrainedQbc, images: np.ndarray) -> np.ndarray:
    images = np.asarray(images)
    if images.ndim != 3 or tuple(images.shape[1:]) != tuple(model.feature_spec.image_shape):
        raise InvalidArgumentError(f'Expected images of shape {model.feature_spec.image_shape}, got {images.shape[1:] if images.ndim == 3 else images.shape}')
    return _binarize_many(model.binarizer, _pool_many(images, model.feature_spec))

def _single(image: np.ndarray) -> np.ndarray:
    image = np.asarray(image)
    if image.ndim != 2:
        raise InvalidArgumentError(f'Expected a single 2-d image, got shape {image.shape}')
    return image[np.newaxis]

def _quantum_scores(model: TrainedQbc, bits: np.ndarray) -> np.ndarray:
    # (count, 2) scores read from the simulated circuit at |0 X*> and |1 X*>
    n_rows = bits.shape[0]
    idx0 = _basis_indices(np.zeros(n_rows, dtype=np.int64), bits)
    idx1 = _basis_indices(np.ones(n_rows, dtype=np.int64), bits)
    if model.config.shots == 0:
        probs = model.state.probabilities()
        return np.stack([probs[idx0], probs[idx1]], axis=1)
    counts = model.shot_counts
    shots = model.config.shots
    f = np.vectorize(lambda i: counts.get(int(i), 0) / shots, otypes=[np.float64])
    return np.stack([f(idx0), f(idx1)], axis=1) if n_rows > 0 else np.zeros((0, 2))

def _classical_scores(model: TrainedQbc, bits: np.ndarray) -> np.ndarray:
    ret = np.empty((bits.shape[0], 2), dtype=np.float64)
    for r, x in enumerate(bits):
        ret[r, 0] = _joint_probability(model.net, model.cpts, 0, x)
        ret[r, 1] = _joint_probability(model.net, model.cpts, 1, x)
    return ret

def _is_tie(a: float, b: float) -> bool:
    return abs(a - b) <= TIE_RTOL * max(abs(a), abs(b))

def _better_bit(s0: float, s1: float, *, higher_wins: bool) -> int:
    # ties go to bit 0
    if _is_tie(s0, s1):
        return 0
    return int(s1 > s0) if higher_wins else int(s1 < s0)

def _decide(model: TrainedQbc, scores: np.ndarray) -> List[int]:
    return [model.label_of(_better_bit(float(p0), float(p1), higher_wins=True)) for p0, p1 in scores]

def _predict_many(model: TrainedQbc, images: np.ndarray) -> Tuple[List[int], np.ndarray]:
    scores = _quantum_scores(model, _feature_bits(model, images))
    return _decide(model, scores), scores

def _classical_predict_many(model: TrainedQbc, images: np.ndarray) -> Tuple[List[int], np.ndarray]:
    scores = _classical_scores(model, _feature_bits(model, images))
    return _decide(model, scores), scores

def _predict(model: TrainedQbc, image: np.ndarray) -> Tuple[int, Scores]:
    labels, scores = _predict_many(model, _single(image))
    return labels[0], (float(scores[0, 0]), float(scores[0, 1]))

def _classical_predict(model: TrainedQbc, image: np.ndarray) -> Tuple[int, Scores]:
    labels, scores = _classical_predict_many(model, _single(image))
    return labels[0], (float(scores[0, 0]), float(scores[0, 1]))

def _decide_with_loss(model: TrainedQbc, scores: Scores, loss: LossMatrix) -> int:
    risks = loss.risks(scores[0], scores[1])
    return model.label_of(_better_bit(float(risks[0]), float(risks[1]), higher_wins=False))

def _predict_with_loss(model: TrainedQbc, image: np.ndarray, loss: LossMatrix) -> int:
    _, scores = _predict(model, image)
    return _decide_with_loss(model, scores, loss)
