from typing import Dict, List, Sequence, Tuple

import numpy as np

from .._exceptions import InvalidArgumentError
from .._misc import _warn
from .BayesNet import BayesNet, _parent_keys
from .CptSet import CptSet
from .SampleSet import SampleSet


def _estimate_cpts(net: BayesNet, samples: SampleSet, *, alpha: float=1.0) -> CptSet:
    samples.require_non_empty()
    if alpha < 0:
        raise InvalidArgumentError(f'alpha must be nonnegative: {alpha}')
    if samples.n_features != net.n_features:
        raise InvalidArgumentError(f'Samples have {samples.n_features} features, network has {net.n_features}')
    N = len(samples)
    zero_entries: List[Tuple[int, str]] = []
    count0 = int(np.sum(samples.labels == 0))
    prior0 = (count0 + alpha) / (N + 2 * alpha)
    if alpha == 0 and prior0 in (0.0, 1.0):
        zero_entries.append((0, ''))
    tables: Dict[int, Dict[str, float]] = {}
    for node in range(1, net.n_features + 1):
        pa = net.parents(node)
        k = len(pa)
        # parent assignment index, label bit most significant
        code = np.zeros(N, dtype=np.intp)
        for p in pa:
            code = code * 2 + samples.column(p)
        is0 = samples.column(node) == 0
        n_parent = np.bincount(code, minlength=2 ** k)
        n_zero = np.bincount(code[is0], minlength=2 ** k)
        table = {}
        for a, key in enumerate(_parent_keys(k)):
            den = n_parent[a] + 2 * alpha
            if den == 0:
                table[key] = 0.5
                zero_entries.append((node, key))
                continue
            v = (n_zero[a] + alpha) / den
            if alpha == 0 and v in (0.0, 1.0):
                zero_entries.append((node, key))
            table[key] = float(v)
        tables[node] = table
    if len(zero_entries) > 0:
        _warn(f'{len(zero_entries)} CPT entries are exactly 0, 1 or unobserved (smoothing disabled)')
    return CptSet(prior0=prior0, tables=tables, alpha=alpha, zero_entries=zero_entries)

def _joint_probability(net: BayesNet, cpts: CptSet, y: int, x: Sequence[int]) -> float:
    if len(x) != net.n_features:
        raise InvalidArgumentError(f'Expected {net.n_features} feature bits, got {len(x)}')
    values = [int(y)] + [int(b) for b in x]
    if any(v not in (0, 1) for v in values):
        raise InvalidArgumentError(f'Assignments must be bits: y={y}, x={list(x)}')
    p = cpts.prior0 if values[0] == 0 else 1 - cpts.prior0
    for node in range(1, net.n_features + 1):
        key = ''.join(str(values[q]) for q in net.parents(node))
        p0 = cpts.entry(node, key)
        p *= p0 if values[node] == 0 else 1 - p0
    return p
