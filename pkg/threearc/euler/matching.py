"""
Visit/arc bipartite graphs and their matchings for threearc

A visit p is adjacent to the arc xy exactly when y is not an end of p.
Matchings are found with augmenting paths, trying visits and arcs in
list order, so the result is reproducible.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from threearc.core.errors import GraphError
from threearc.core.graph import Arc
from threearc.euler.visits import Visit, VisitDecomposition


@dataclass(frozen=True)
class VisitArcGraph:
    """Bipartite graph between visits to x (left) and arcs with tail x (right)"""

    left: Tuple[Visit, ...]
    right: Tuple[Arc, ...]
    adjacency: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adjacency = tuple(
            tuple(j for j, arc in enumerate(self.right) if not visit.contains(arc.head))
            for visit in self.left
        )
        object.__setattr__(self, "adjacency", adjacency)

    @property
    def balanced(self) -> bool:
        return len(self.left) == len(self.right)

    def adjacent(self, visit: Visit, arc: Arc) -> bool:
        return visit.mid_vertex == arc.tail and not visit.contains(arc.head)


@dataclass(frozen=True)
class Matching:
    """Visit/arc pairs of a matching"""

    pairs: Tuple[Tuple[Visit, Arc], ...]

    def arc_for(self, visit: Visit) -> Arc:
        for p, arc in self.pairs:
            if p.key == visit.key:
                return arc
        raise KeyError(f"visit {visit} is not matched")

    def by_key(self) -> Dict[FrozenSet[int], Arc]:
        return {p.key: arc for p, arc in self.pairs}

    def __len__(self) -> int:
        return len(self.pairs)


def build_H(
    decomposition: VisitDecomposition, arcs: Sequence[Arc], allow_unbalanced: bool = False
) -> VisitArcGraph:
    """
    Build H(x) for a visit-decomposition.

    Args:
        decomposition: J(x)
        arcs: A(x), the arcs of the simple graph with tail x
        allow_unbalanced: Accept |J(x)| != |A(x)|

    Returns:
        The visit/arc bipartite graph

    Raises:
        GraphError: If an arc does not start at x, or the sides differ in
            size without allow_unbalanced
    """
    x = decomposition.mid_vertex
    for arc in arcs:
        if arc.tail != x:
            raise GraphError(f"arc {arc} does not have tail {x}")
    if not allow_unbalanced and len(decomposition.visits) != len(arcs):
        raise GraphError(
            f"{len(decomposition.visits)} visits against {len(arcs)} arcs at vertex {x}"
        )
    return VisitArcGraph(tuple(decomposition.visits), tuple(arcs))


def _maximum_matching(graph: VisitArcGraph, skip_left=(), skip_right=()) -> List[Optional[int]]:
    """match_of_right[j] = index of the visit matched to arc j, or None"""
    match_of_right: List[Optional[int]] = [None] * len(graph.right)
    blocked_right = set(skip_right)

    def search(i: int, seen: List[bool]) -> bool:
        for j in graph.adjacency[i]:
            if j in blocked_right or seen[j]:
                continue
            seen[j] = True
            if match_of_right[j] is None or search(match_of_right[j], seen):
                match_of_right[j] = i
                return True
        return False

    for i in range(len(graph.left)):
        if i not in skip_left:
            search(i, [False] * len(graph.right))
    return match_of_right


def _as_matching(graph: VisitArcGraph, match_of_right: Sequence[Optional[int]]) -> Matching:
    pairs = sorted((i, j) for j, i in enumerate(match_of_right) if i is not None)
    return Matching(tuple((graph.left[i], graph.right[j]) for i, j in pairs))


def maximum_matching(graph: VisitArcGraph) -> Matching:
    """A maximum matching of H(x), ordered by visit"""
    return _as_matching(graph, _maximum_matching(graph))


def perfect_matching(graph: VisitArcGraph) -> Optional[Matching]:
    """
    The maximum matching of H(x) when it covers both sides.

    Returns None when the graph is unbalanced or its maximum matching
    leaves a visit or an arc unmatched.
    """
    if not graph.balanced:
        return None
    matching = maximum_matching(graph)
    if len(matching) != len(graph.left):
        return None
    return matching


def pinned_perfect_matching(
    graph: VisitArcGraph, pins: Sequence[Tuple[Visit, Arc]]
) -> Optional[Matching]:
    """
    A perfect matching that contains every pinned (visit, arc) pair.

    Returns None if a pin is not an edge of the graph, two pins collide,
    or the rest cannot be matched perfectly.
    """
    if not graph.balanced:
        return None
    keys = [v.key for v in graph.left]
    pinned_left, pinned_right = [], []
    for visit, arc in pins:
        if visit.key not in keys or arc not in graph.right:
            return None
        i, j = keys.index(visit.key), graph.right.index(arc)
        if j not in graph.adjacency[i] or i in pinned_left or j in pinned_right:
            return None
        pinned_left.append(i)
        pinned_right.append(j)

    match_of_right = _maximum_matching(graph, set(pinned_left), set(pinned_right))
    for i, j in zip(pinned_left, pinned_right):
        match_of_right[j] = i
    if any(i is None for i in match_of_right):
        return None
    return _as_matching(graph, match_of_right)
