import math
from itertools import product
from typing import List

from .._exceptions import InvalidArgumentError, InvalidModelError
from ..bayesnet.BayesNet import LABEL_NODE, BayesNet
from ..bayesnet.CptSet import CptSet
from .Circuit import Circuit, Gate

_PROBABILITY_TOLERANCE = 1e-12


def _angle_from_probability(p: float) -> float:
    """f(P) = 2 arccos(sqrt(P)), so that Ry(f(P))|0> has |0>-amplitude sqrt(P)"""
    p = float(p)
    if not (-_PROBABILITY_TOLERANCE <= p <= 1 + _PROBABILITY_TOLERANCE):
        raise InvalidArgumentError(f'Probability out of range [0, 1]: {p}')
    p = min(max(p, 0.0), 1.0)
    return 2 * math.acos(math.sqrt(p))

def _probability_from_angle(theta: float) -> float:
    return math.cos(theta / 2) ** 2

def _compile(net: BayesNet, cpts: CptSet, *, elide_x_pairs: bool=False) -> Circuit:
    gates: List[Gate] = [Gate.ry(LABEL_NODE, _angle_from_probability(cpts.prior0))]
    for node in net.encode_order:
        controls = net.parents(node)
        for assignment in product([0, 1], repeat=len(controls)):
            key = ''.join(str(v) for v in assignment)
            try:
                p0 = cpts.entry(node, key)
            except InvalidArgumentError:
                raise InvalidModelError(f'Missing CPT entry for x{node} with parents {list(controls)}={key}')
            flips = [q for q, v in zip(controls, assignment) if v == 0]
            gates.extend(Gate.x(q) for q in flips)
            gates.append(Gate.ry(node, _angle_from_probability(p0), controls=controls))
            gates.extend(Gate.x(q) for q in reversed(flips))
    if elide_x_pairs:
        gates = _elide_x_pairs(gates)
    return Circuit(n_qubits=net.n_features + 1, gates=tuple(gates))

def _elide_x_pairs(gates: List[Gate]) -> List[Gate]:
    # drop adjacent X pairs on the same qubit; they multiply to the identity
    ret: List[Gate] = []
    for g in gates:
        if g.kind == 'x' and len(ret) > 0 and ret[-1] == g:
            ret.pop()
        else:
            ret.append(g)
    return ret
