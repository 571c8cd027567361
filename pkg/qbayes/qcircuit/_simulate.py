import math
from typing import Dict, Sequence, Union

import numpy as np

from .._config import _max_qubits
from .._exceptions import InvalidArgumentError, ResourceLimitError
from .Circuit import Circuit, Gate
from .StateVector import StateVector, _basis_index


def _simulate(circuit: Circuit, *, max_qubits: Union[int, None]=None) -> StateVector:
    cap = max_qubits if max_qubits is not None else _max_qubits()
    n = circuit.n_qubits
    if n > cap:
        raise ResourceLimitError(f'Circuit has {n} qubits, above the simulator cap of {cap}')
    psi = np.zeros(2 ** n, dtype=np.float64)
    psi[0] = 1.0
    # axis q of the reshaped tensor is qubit q (qubit 0 most significant)
    psi = psi.reshape([2] * n)
    for g in circuit.gates:
        _apply_gate(psi, g, n)
    return StateVector(psi.reshape(-1))

def _apply_gate(psi: np.ndarray, g: Gate, n: int):
    idx0 = [slice(None)] * n
    for c in g.controls:
        idx0[c] = 1
    idx1 = list(idx0)
    idx0[g.target] = 0
    idx1[g.target] = 1
    i0, i1 = tuple(idx0), tuple(idx1)
    a0 = psi[i0].copy()
    a1 = psi[i1].copy()
    if g.kind == 'x':
        psi[i0] = a1
        psi[i1] = a0
    else:
        c = math.cos(g.theta / 2)
        s = math.sin(g.theta / 2)
        psi[i0] = c * a0 - s * a1
        psi[i1] = s * a0 + c * a1

def _probability_of(state: StateVector, y: int, x: Sequence[int]) -> float:
    index = _basis_index(state.n_qubits, y, x)
    return float(state.amplitudes[index] ** 2)

def _sample_shots(state: StateVector, shots: int, *, seed: int=0) -> Dict[int, int]:
    if shots < 1:
        raise InvalidArgumentError(f'shots must be at least 1: {shots}')
    probs = state.probabilities()
    probs = probs / probs.sum()
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(shots, probs)
    return {int(i): int(counts[i]) for i in np.flatnonzero(counts)}
