from typing import Dict, Iterator, Tuple

import numpy as np

from .._exceptions import InvalidArgumentError


class WeightMatrix:
    """Symmetric nonnegative edge weights over feature pairs, indexed by feature NodeId (1..n)"""
    def __init__(self, weights: np.ndarray):
        w = np.array(weights, dtype=np.float64)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise InvalidArgumentError(f'Weight matrix must be square, got shape {w.shape}')
        n = w.shape[0]
        off = ~np.eye(n, dtype=bool)
        if not np.array_equal(w[off], w.T[off]):
            raise InvalidArgumentError('Weight matrix must be symmetric')
        if not np.all(np.isfinite(w[off])) or np.any(w[off] < 0):
            raise InvalidArgumentError('Weights must be finite and nonnegative')
        np.fill_diagonal(w, 0)
        w.setflags(write=False)
        self._w = w

    @staticmethod
    def from_pairs(n_features: int, pairs: Dict[Tuple[int, int], float]) -> 'WeightMatrix':
        w = np.zeros((n_features, n_features))
        for (i, j), v in pairs.items():
            if not (1 <= i <= n_features and 1 <= j <= n_features) or i == j:
                raise InvalidArgumentError(f'Invalid feature pair ({i}, {j}) for {n_features} features')
            w[i - 1, j - 1] = v
            w[j - 1, i - 1] = v
        return WeightMatrix(w)

    @property
    def n_features(self) -> int:
        return self._w.shape[0]

    def __getitem__(self, ij: Tuple[int, int]) -> float:
        i, j = ij
        if not (1 <= i <= self.n_features and 1 <= j <= self.n_features):
            raise InvalidArgumentError(f'Feature pair out of range: ({i}, {j})')
        return float(self._w[i - 1, j - 1])

    def pairs(self) -> Iterator[Tuple[int, int, float]]:
        """(i, j, weight) for all i < j in lexicographic order"""
        n = self.n_features
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                yield i, j, float(self._w[i - 1, j - 1])

    def to_array(self) -> np.ndarray:
        return self._w.copy()
