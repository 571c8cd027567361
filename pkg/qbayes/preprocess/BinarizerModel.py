import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .._exceptions import FormatError, InvalidArgumentError
from .._misc import _exact_float, _require, _warn

DEFAULT_SIGMA_FLOOR = 1e-3
DEFAULT_SIGMA_TOL = 1e-9


@dataclass(frozen=True)
class FeatureGaussians:
    """Class-conditional normal fits of one pooled feature and where their densities cross"""
    mu0: float
    sigma0: float
    mu1: float
    sigma1: float
    intersections: Tuple[float, ...]
    # the intersection quadratic had no real roots; intersections holds the midpoint instead
    complex_roots: bool = False

    @property
    def ascending(self) -> bool:
        return self.mu0 <= self.mu1

    def to_dict(self) -> dict:
        return {
            'mu0': _exact_float(self.mu0),
            'sigma0': _exact_float(self.sigma0),
            'mu1': _exact_float(self.mu1),
            'sigma1': _exact_float(self.sigma1),
            'intersections': [_exact_float(v) for v in self.intersections],
            'complex_roots': self.complex_roots
        }

    @staticmethod
    def from_dict(x: dict) -> 'FeatureGaussians':
        ins = tuple(float(v) for v in _require(x, 'intersections', what='binarizer feature'))
        if len(ins) not in (1, 2) or list(ins) != sorted(ins):
            raise FormatError(f'Expected one or two ascending intersections: {list(ins)}')
        return FeatureGaussians(
            mu0=float(_require(x, 'mu0', what='binarizer feature')),
            sigma0=float(_require(x, 'sigma0', what='binarizer feature')),
            mu1=float(_require(x, 'mu1', what='binarizer feature')),
            sigma1=float(_require(x, 'sigma1', what='binarizer feature')),
            intersections=ins,
            complex_roots=bool(x.get('complex_roots', False))
        )


class BinarizerModel:
    """Per-feature Gaussian thresholds fitted on the training split"""
    def __init__(self, features: Sequence[FeatureGaussians], *, sigma_floor: float=DEFAULT_SIGMA_FLOOR):
        if len(features) < 1:
            raise InvalidArgumentError('A binarizer needs at least one feature')
        self._features = tuple(features)
        self._sigma_floor = float(sigma_floor)

    @property
    def features(self) -> Tuple[FeatureGaussians, ...]:
        return self._features

    @property
    def n_features(self) -> int:
        return len(self._features)

    @property
    def sigma_floor(self) -> float:
        return self._sigma_floor

    def feature(self, i: int) -> FeatureGaussians:
        """Fit of feature i (1-based, matching the network's NodeId)"""
        if not (1 <= i <= len(self._features)):
            raise InvalidArgumentError(f'Feature index out of range 1..{len(self._features)}: {i}')
        return self._features[i - 1]

    def warnings(self) -> List[str]:
        return [f'x{i + 1}: Gaussian intersection has complex roots; using the midpoint of the means' for i, f in enumerate(self._features) if f.complex_roots]

    def to_dict(self) -> dict:
        return {
            'sigma_floor': _exact_float(self._sigma_floor),
            'features': [f.to_dict() for f in self._features]
        }

    @staticmethod
    def from_dict(x: dict) -> 'BinarizerModel':
        try:
            return BinarizerModel(
                [FeatureGaussians.from_dict(f) for f in _require(x, 'features', what='binarizer')],
                sigma_floor=float(x.get('sigma_floor', DEFAULT_SIGMA_FLOOR))
            )
        except (TypeError, ValueError, InvalidArgumentError) as e:
            raise FormatError(f'Invalid binarizer: {e}')

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinarizerModel):
            return NotImplemented
        return self._features == other._features and self._sigma_floor == other._sigma_floor


def _gaussian_intersections(mu0: float, sigma0: float, mu1: float, sigma1: float, *, sigma_tol: float=DEFAULT_SIGMA_TOL) -> Tuple[Tuple[float, ...], bool]:
    """Points where N(mu0, sigma0^2) and N(mu1, sigma1^2) have equal density

    Returns:
        Tuple[Tuple[float, ...], bool]: one or two ascending points, and whether the
        quadratic had complex roots (in which case the single point is the midpoint)
    """
    if sigma0 <= 0 or sigma1 <= 0:
        raise InvalidArgumentError(f'Standard deviations must be positive: {sigma0}, {sigma1}')
    midpoint = (mu0 + mu1) / 2
    if abs(sigma0 - sigma1) <= sigma_tol * max(sigma0, sigma1):
        return (midpoint,), False
    a = 1 / (2 * sigma1 ** 2) - 1 / (2 * sigma0 ** 2)
    b = mu0 / sigma0 ** 2 - mu1 / sigma1 ** 2
    c = mu1 ** 2 / (2 * sigma1 ** 2) - mu0 ** 2 / (2 * sigma0 ** 2) + math.log(sigma1 / sigma0)
    disc = b * b - 4 * a * c
    if disc < 0:
        return (midpoint,), True
    if disc == 0:
        return (-b / (2 * a),), False
    # numerically stable pair of roots
    q = -(b + math.copysign(math.sqrt(disc), b)) / 2
    r1 = q / a
    r2 = c / q if q != 0 else -r1
    return tuple(sorted((r1, r2))), False

def _fit_binarizer(values0: np.ndarray, values1: np.ndarray, *, sigma_floor: float=DEFAULT_SIGMA_FLOOR, sigma_tol: float=DEFAULT_SIGMA_TOL) -> BinarizerModel:
    v0 = _as_columns(values0)
    v1 = _as_columns(values1)
    if v0.shape[1] != v1.shape[1]:
        raise InvalidArgumentError(f'Classes have different feature counts: {v0.shape[1]} vs {v1.shape[1]}')
    if v0.shape[0] < 2 or v1.shape[0] < 2:
        raise InvalidArgumentError(f'Each class needs at least 2 values per feature, got {v0.shape[0]} and {v1.shape[0]}')
    if sigma_floor <= 0:
        raise InvalidArgumentError(f'sigma_floor must be positive: {sigma_floor}')
    features = []
    for k in range(v0.shape[1]):
        mu0, sigma0 = _mle(v0[:, k], sigma_floor)
        mu1, sigma1 = _mle(v1[:, k], sigma_floor)
        ins, complex_roots = _gaussian_intersections(mu0, sigma0, mu1, sigma1, sigma_tol=sigma_tol)
        features.append(FeatureGaussians(mu0=mu0, sigma0=sigma0, mu1=mu1, sigma1=sigma1, intersections=ins, complex_roots=complex_roots))
    model = BinarizerModel(features, sigma_floor=sigma_floor)
    for w in model.warnings():
        _warn(w)
    return model

def _mle(v: np.ndarray, sigma_floor: float) -> Tuple[float, float]:
    mu = float(np.mean(v))
    # maximum likelihood variance divides by N
    sigma = math.sqrt(float(np.mean((v - mu) ** 2)))
    return mu, max(sigma, sigma_floor)

def _as_columns(values) -> np.ndarray:
    v = np.asarray(values, dtype=np.float64)
    if v.ndim == 1:
        v = v[:, np.newaxis]
    if v.ndim != 2:
        raise InvalidArgumentError(f'Expected values of shape (count, n_features), got {v.shape}')
    return v

def _binarize_many(model: BinarizerModel, pooled: np.ndarray) -> np.ndarray:
    x = np.asarray(pooled, dtype=np.float64)
    if x.ndim != 2 or x.shape[1] != model.n_features:
        raise InvalidArgumentError(f'Expected pooled values of shape (count, {model.n_features}), got {x.shape}')
    out = np.empty(x.shape, dtype=np.uint8)
    for k, f in enumerate(model.features):
        out[:, k] = _binarize_column(f, x[:, k])
    return out

def _binarize_column(f: FeatureGaussians, x: np.ndarray) -> np.ndarray:
    if len(f.intersections) == 1:
        ins = f.intersections[0]
        zero = ((x <= ins) & f.ascending) | ((x > ins) & (not f.ascending))
    else:
        ins1, ins2 = f.intersections
        # below the first crossing, or between the crossings but nearer the first
        region = (x <= ins1) | ((ins1 <= x) & (x <= ins2) & (np.abs(ins1 - x) <= np.abs(ins2 - x)))
        zero = region if f.ascending else ~region
    return np.where(zero, 0, 1).astype(np.uint8)

def _binarize(model: BinarizerModel, i: int, x: float) -> int:
    f = model.feature(i)
    return int(_binarize_column(f, np.array([float(x)]))[0])
