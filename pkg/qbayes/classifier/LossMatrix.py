from typing import Sequence

import numpy as np

from .._exceptions import InvalidArgumentError


class LossMatrix:
    """2x2 misclassification losses: entry [i][j] is the loss of deciding class i when the truth is j"""
    def __init__(self, values: Sequence[Sequence[float]]):
        v = np.array(values, dtype=np.float64)
        if v.shape != (2, 2):
            raise InvalidArgumentError(f'Loss matrix must be 2x2, got shape {v.shape}')
        if not np.all(np.isfinite(v)) or np.any(v < 0):
            raise InvalidArgumentError(f'Losses must be finite and nonnegative: {v.tolist()}')
        v.setflags(write=False)
        self._values = v

    @staticmethod
    def zero_one() -> 'LossMatrix':
        return LossMatrix([[0, 1], [1, 0]])

    @property
    def values(self) -> np.ndarray:
        return self._values

    def __getitem__(self, ij) -> float:
        return float(self._values[ij])

    def risks(self, p0: float, p1: float) -> np.ndarray:
        """Conditional risk of deciding 0 and 1, up to the common factor P(X)"""
        return self._values @ np.array([p0, p1])
