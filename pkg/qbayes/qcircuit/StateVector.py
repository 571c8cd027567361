from typing import Sequence

import numpy as np

from .._exceptions import InvalidArgumentError


class StateVector:
    """Real amplitudes of an n-qubit state; basis index = y*2^n + x_1*2^(n-1) + ... + x_n"""
    def __init__(self, amplitudes: np.ndarray):
        a = np.array(amplitudes, dtype=np.float64)
        n = int(round(np.log2(a.size))) if a.size > 0 else 0
        if a.ndim != 1 or a.size < 2 or 2 ** n != a.size:
            raise InvalidArgumentError(f'Amplitude vector length must be a power of two, got {a.shape}')
        a.setflags(write=False)
        self._amplitudes = a
        self._n_qubits = n

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amplitudes

    @property
    def n_qubits(self) -> int:
        return self._n_qubits

    def probabilities(self) -> np.ndarray:
        return self._amplitudes ** 2

    def norm_squared(self) -> float:
        return float(np.sum(self._amplitudes ** 2))


def _basis_index(n_qubits: int, y: int, x: Sequence[int]) -> int:
    if len(x) != n_qubits - 1:
        raise InvalidArgumentError(f'Expected {n_qubits - 1} feature bits, got {len(x)}')
    index = 0
    for b in [y] + list(x):
        if b not in (0, 1):
            raise InvalidArgumentError(f'Basis labels must be bits: y={y}, x={list(x)}')
        index = index * 2 + int(b)
    return index

def _basis_indices(y: np.ndarray, x: np.ndarray) -> np.ndarray:
    # vectorized _basis_index over rows of x
    n = x.shape[1]
    weights = 2 ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return np.asarray(y, dtype=np.int64) * (2 ** n) + x.astype(np.int64) @ weights
