from typing import Dict, List, Mapping, Sequence, Tuple

from .._exceptions import FormatError, InvalidArgumentError
from .._misc import _exact_float, _require
from .BayesNet import BayesNet, _parent_keys


class CptSet:
    """Conditional probability tables of a BayesNet

    prior0 is P(y=0). tables[i][key] is P(x_i=0 | parents=key), where key is
    the bitstring of the parent values in parent-list order (label first).
    """
    def __init__(self, *, prior0: float, tables: Mapping[int, Mapping[str, float]], alpha: float, zero_entries: Sequence[Tuple[int, str]]=()):
        self._prior0 = float(prior0)
        self._tables: Dict[int, Dict[str, float]] = {int(i): {str(k): float(v) for k, v in t.items()} for i, t in tables.items()}
        self._alpha = float(alpha)
        self._zero_entries = tuple((int(i), str(k)) for i, k in zero_entries)
        for p in [self._prior0] + [v for t in self._tables.values() for v in t.values()]:
            if self._alpha > 0:
                if not (0 < p < 1):
                    raise InvalidArgumentError(f'Smoothed probabilities must lie in (0, 1): {p}')
            elif not (0 <= p <= 1):
                raise InvalidArgumentError(f'Probability out of range: {p}')

    @property
    def prior0(self) -> float:
        return self._prior0

    @property
    def alpha(self) -> float:
        return self._alpha

    @property
    def zero_entries(self) -> Tuple[Tuple[int, str], ...]:
        """Entries (node, key) that came out exactly 0 or 1, or had no rows, because smoothing was disabled; node 0 is the prior"""
        return self._zero_entries

    def table(self, node: int) -> Dict[str, float]:
        if node not in self._tables:
            raise InvalidArgumentError(f'No table for node {node}')
        return dict(self._tables[node])

    def nodes(self) -> List[int]:
        return sorted(self._tables.keys())

    def entry(self, node: int, key: str) -> float:
        t = self._tables.get(node, None)
        if t is None or key not in t:
            raise InvalidArgumentError(f'No CPT entry for node {node} with parent assignment {key}')
        return t[key]

    def matches(self, net: BayesNet) -> bool:
        if self.nodes() != list(range(1, net.n_features + 1)):
            return False
        for i in self.nodes():
            if set(self._tables[i].keys()) != set(_parent_keys(len(net.parents(i)))):
                return False
        return True

    def to_dict(self) -> dict:
        return {
            'prior0': _exact_float(self._prior0),
            'alpha': _exact_float(self._alpha),
            'tables': {str(i): {k: _exact_float(v) for k, v in sorted(t.items())} for i, t in sorted(self._tables.items())},
            'zero_entries': [[i, k] for i, k in self._zero_entries]
        }

    @staticmethod
    def from_dict(x: dict) -> 'CptSet':
        try:
            tables = _require(x, 'tables', what='cpts')
            return CptSet(
                prior0=float(_require(x, 'prior0', what='cpts')),
                alpha=float(_require(x, 'alpha', what='cpts')),
                tables={int(i): t for i, t in tables.items()},
                zero_entries=[(int(a[0]), str(a[1])) for a in x.get('zero_entries', [])]
            )
        except (TypeError, ValueError, AttributeError) as e:
            raise FormatError(f'Invalid CPTs in model document: {e}')

    def __eq__(self, other) -> bool:
        if not isinstance(other, CptSet):
            return NotImplemented
        return self._prior0 == other._prior0 and self._tables == other._tables and self._alpha == other._alpha
