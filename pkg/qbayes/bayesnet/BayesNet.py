from typing import Iterable, List, Sequence, Tuple, Union

from .._exceptions import FormatError, InvalidArgumentError
from .._misc import _require

LABEL_NODE = 0


class BayesNet:
    """Binary Bayesian network over one label node (index 0) and n feature nodes (1..n)

    Every feature has the label as its first parent and at most one feature
    parent. encode_order is the order in which feature qubits are encoded and
    must list every feature parent before its children.
    """
    def __init__(self, *, n_features: int, parents: Sequence[Sequence[int]], encode_order: Sequence[int]):
        if n_features < 1:
            raise InvalidArgumentError(f'A network needs at least one feature: n_features={n_features}')
        if len(parents) != n_features + 1:
            raise InvalidArgumentError(f'Expected {n_features + 1} parent lists, got {len(parents)}')
        self._n_features = n_features
        self._parents: Tuple[Tuple[int, ...], ...] = tuple(tuple(int(p) for p in pa) for pa in parents)
        self._encode_order: Tuple[int, ...] = tuple(int(i) for i in encode_order)
        self._check()

    @property
    def n_features(self) -> int:
        return self._n_features

    @property
    def encode_order(self) -> Tuple[int, ...]:
        return self._encode_order

    def parents(self, node: int) -> Tuple[int, ...]:
        _check_node(node, self._n_features)
        return self._parents[node]

    def feature_parent(self, node: int) -> Union[int, None]:
        pa = [p for p in self.parents(node) if p != LABEL_NODE]
        return pa[0] if len(pa) > 0 else None

    def edges(self) -> List[Tuple[int, int]]:
        """Directed (parent, child) edges, label edges first, in node order"""
        ret = []
        for child in range(1, self._n_features + 1):
            for p in self._parents[child]:
                ret.append((p, child))
        return sorted(ret)

    def feature_edges(self) -> List[Tuple[int, int]]:
        return [e for e in self.edges() if e[0] != LABEL_NODE]

    def is_naive(self) -> bool:
        return len(self.feature_edges()) == 0

    def to_dict(self) -> dict:
        return {
            'n_features': self._n_features,
            'parents': [list(pa) for pa in self._parents],
            'encode_order': list(self._encode_order)
        }

    @staticmethod
    def from_dict(x: dict) -> 'BayesNet':
        try:
            return BayesNet(
                n_features=int(_require(x, 'n_features', what='network')),
                parents=_require(x, 'parents', what='network'),
                encode_order=_require(x, 'encode_order', what='network')
            )
        except (TypeError, InvalidArgumentError) as e:
            raise FormatError(f'Invalid network in model document: {e}')

    def __eq__(self, other) -> bool:
        if not isinstance(other, BayesNet):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash((self._n_features, self._parents, self._encode_order))

    def __repr__(self) -> str:
        edges = ', '.join(f'{_node_name(a)}->{_node_name(b)}' for a, b in self.edges())
        return f'BayesNet(n_features={self._n_features}, edges=[{edges}])'

    def _check(self):
        n = self._n_features
        if len(self._parents[LABEL_NODE]) != 0:
            raise InvalidArgumentError('The label node cannot have parents')
        for node in range(1, n + 1):
            pa = self._parents[node]
            if pa.count(LABEL_NODE) != 1 or pa[0] != LABEL_NODE:
                raise InvalidArgumentError(f'Feature {node} must list the label node first, exactly once: {pa}')
            if len(pa) > 2:
                raise InvalidArgumentError(f'Feature {node} has more than one feature parent: {pa}')
            for p in pa[1:]:
                _check_node(p, n)
                if p == node:
                    raise InvalidArgumentError(f'Feature {node} cannot be its own parent')
        if sorted(self._encode_order) != list(range(1, n + 1)):
            raise InvalidArgumentError(f'encode_order must be a permutation of 1..{n}: {list(self._encode_order)}')
        # a valid topological order also proves the feature graph is acyclic
        position = {node: k for k, node in enumerate(self._encode_order)}
        for node in range(1, n + 1):
            for p in self._parents[node][1:]:
                if position[p] > position[node]:
                    raise InvalidArgumentError(f'encode_order visits x{node} before its parent x{p}')


def _check_node(node: int, n_features: int):
    if not (0 <= node <= n_features):
        raise InvalidArgumentError(f'Node index out of range 0..{n_features}: {node}')

def _node_name(node: int) -> str:
    return 'y' if node == LABEL_NODE else f'x{node}'

def _parent_keys(k: int) -> Iterable[str]:
    # bitstrings over the parent list, label bit first: '00', '01', '10', '11'
    for a in range(2 ** k):
        yield format(a, f'0{k}b')
