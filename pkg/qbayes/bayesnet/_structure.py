from collections import deque
from typing import Dict, List, Sequence, Tuple

from .._exceptions import InvalidArgumentError
from .._misc import _warn
from .BayesNet import LABEL_NODE, BayesNet
from .SampleSet import SampleSet
from ._mutual_information import _mutual_information_matrix
from ._spanning_tree import _max_weight_spanning_tree


def _build_naive(n: int) -> BayesNet:
    if n < 1:
        raise InvalidArgumentError(f'A naive network needs at least one feature: n={n}')
    return BayesNet(
        n_features=n,
        parents=[()] + [(LABEL_NODE,) for _ in range(n)],
        encode_order=range(1, n + 1)
    )

def _build_spode(n: int, superparent: int) -> BayesNet:
    if n < 1:
        raise InvalidArgumentError(f'A SPODE network needs at least one feature: n={n}')
    if not (1 <= superparent <= n):
        raise InvalidArgumentError(f'Superparent out of range 1..{n}: {superparent}')
    parents: List[Tuple[int, ...]] = [()]
    for i in range(1, n + 1):
        parents.append((LABEL_NODE,) if i == superparent else (LABEL_NODE, superparent))
    order = [superparent] + [i for i in range(1, n + 1) if i != superparent]
    return BayesNet(n_features=n, parents=parents, encode_order=order)

def _build_forest(n: int, tree_edges: Sequence[Tuple[int, int]], roots: Sequence[int]) -> BayesNet:
    # orient undirected feature edges away from the given roots, breadth first
    adjacency: Dict[int, List[int]] = {i: [] for i in range(1, n + 1)}
    for i, j in tree_edges:
        adjacency[i].append(j)
        adjacency[j].append(i)
    parents: List[Tuple[int, ...]] = [()] + [(LABEL_NODE,) for _ in range(n)]
    order: List[int] = []
    visited = set()
    for root in list(roots) + list(range(1, n + 1)):
        if root in visited:
            continue
        visited.add(root)
        queue = deque([root])
        while queue:
            node = queue.popleft()
            order.append(node)
            for nb in sorted(adjacency[node]):
                if nb not in visited:
                    visited.add(nb)
                    parents[nb] = (LABEL_NODE, node)
                    queue.append(nb)
    return BayesNet(n_features=n, parents=parents, encode_order=order)

def _build_tan(samples: SampleSet, n: int, *, root: int=1, alpha: float=1.0, weighting: str='joint') -> BayesNet:
    samples.require_non_empty()
    if samples.n_features != n:
        raise InvalidArgumentError(f'Samples have {samples.n_features} features, expected {n}')
    if n == 1:
        _warn('TAN structure requested for a single feature; using the naive structure')
        return _build_naive(1)
    if not (1 <= root <= n):
        raise InvalidArgumentError(f'TAN root out of range 1..{n}: {root}')
    weights = _mutual_information_matrix(samples, alpha=alpha, weighting=weighting)
    tree = _max_weight_spanning_tree(weights)
    return _build_forest(n, tree, [root])

def _build_symmetric(n: int, pairs: Sequence[Tuple[int, int]]) -> BayesNet:
    if n < 1:
        raise InvalidArgumentError(f'A symmetric network needs at least one feature: n={n}')
    seen = set()
    edges = []
    for pair in pairs:
        a, b = int(pair[0]), int(pair[1])
        if not (1 <= a <= n and 1 <= b <= n):
            raise InvalidArgumentError(f'Symmetric pair out of range 1..{n}: ({a}, {b})')
        if a == b:
            raise InvalidArgumentError(f'A feature cannot be paired with itself: ({a}, {b})')
        if a in seen or b in seen:
            raise InvalidArgumentError(f'Symmetric pairs must be disjoint: ({a}, {b}) overlaps an earlier pair')
        seen.update([a, b])
        edges.append((min(a, b), max(a, b)))
    parents: List[Tuple[int, ...]] = [()] + [(LABEL_NODE,) for _ in range(n)]
    for lo, hi in edges:
        parents[hi] = (LABEL_NODE, lo)
    # each tree root-first: a root is followed directly by its child
    children = {lo: hi for lo, hi in edges}
    order: List[int] = []
    for i in range(1, n + 1):
        if len(parents[i]) == 1:
            order.append(i)
            if i in children:
                order.append(children[i])
    return BayesNet(n_features=n, parents=parents, encode_order=order)
