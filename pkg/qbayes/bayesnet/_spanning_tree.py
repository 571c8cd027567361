from typing import Dict, List, Sequence, Tuple

from .._exceptions import InvalidArgumentError
from .WeightMatrix import WeightMatrix


class _UnionFind:
    def __init__(self, nodes: Sequence[int]):
        self._parent: Dict[int, int] = {v: v for v in nodes}

    def root(self, v: int) -> int:
        while self._parent[v] != v:
            self._parent[v] = self._parent[self._parent[v]]
            v = self._parent[v]
        return v

    def join(self, v1: int, v2: int):
        r1, r2 = self.root(v1), self.root(v2)
        # attach the larger root under the smaller one so roots stay deterministic
        if r1 < r2:
            self._parent[r2] = r1
        else:
            self._parent[r1] = r2


def _max_weight_spanning_tree(weights: WeightMatrix) -> List[Tuple[int, int]]:
    n = weights.n_features
    if n < 2:
        raise InvalidArgumentError(f'A spanning tree needs at least 2 features: n={n}')
    # Kruskal: heaviest first, ties broken by lexicographic (i, j)
    edges = sorted(weights.pairs(), key=lambda e: (-e[2], e[0], e[1]))
    tree = _UnionFind(list(range(1, n + 1)))
    ret: List[Tuple[int, int]] = []
    for i, j, _ in edges:
        if tree.root(i) != tree.root(j):
            tree.join(i, j)
            ret.append((i, j))
            if len(ret) == n - 1:
                break
    return ret
