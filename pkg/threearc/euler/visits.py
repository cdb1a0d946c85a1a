"""
Visits and visit-decompositions for threearc

A visit (a, x, b) is a length-2 sub-trail through x together with its
two edge ids. Inside one trail a visit is identified by its edge pair,
since no edge repeats.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from threearc.core.errors import TrailError
from threearc.core.graph import Multigraph, Trail


@dataclass(frozen=True)
class Visit:
    """Oriented visit entry_vertex -(entry_edge)- mid_vertex -(exit_edge)- exit_vertex"""

    entry_vertex: int
    mid_vertex: int
    exit_vertex: int
    entry_edge: int
    exit_edge: int

    def __post_init__(self):
        if self.entry_edge == self.exit_edge:
            raise TrailError(f"visit to {self.mid_vertex} uses edge {self.entry_edge} twice")

    @property
    def key(self) -> FrozenSet[int]:
        """Orientation-free identity: the two edge ids"""
        return frozenset((self.entry_edge, self.exit_edge))

    @property
    def ends(self) -> Tuple[int, int]:
        """End vertices, sorted"""
        a, b = self.entry_vertex, self.exit_vertex
        return (a, b) if a <= b else (b, a)

    def reversed(self) -> "Visit":
        return Visit(self.exit_vertex, self.mid_vertex, self.entry_vertex, self.exit_edge, self.entry_edge)

    def same_as(self, other: "Visit") -> bool:
        """Equal up to orientation"""
        return self.mid_vertex == other.mid_vertex and self.key == other.key

    def is_loop(self) -> bool:
        """Enters and leaves through the same neighbour, like (a, x, a)"""
        return self.entry_vertex == self.exit_vertex

    def is_twin_of(self, other: "Visit") -> bool:
        """Same mid-vertex and end pair with four distinct edges"""
        return (
            self.mid_vertex == other.mid_vertex
            and self.ends == other.ends
            and not (self.key & other.key)
        )

    def contains(self, vertex: int) -> bool:
        return vertex in (self.entry_vertex, self.exit_vertex)

    def check(self, multigraph: Multigraph) -> None:
        if set(multigraph.ends[self.entry_edge]) != {self.entry_vertex, self.mid_vertex}:
            raise TrailError(f"entry edge {self.entry_edge} does not match visit {self}")
        if set(multigraph.ends[self.exit_edge]) != {self.mid_vertex, self.exit_vertex}:
            raise TrailError(f"exit edge {self.exit_edge} does not match visit {self}")

    def __str__(self) -> str:
        return f"({self.entry_vertex},{self.mid_vertex},{self.exit_vertex})"


@dataclass(frozen=True)
class VisitDecomposition:
    """A partition of the edges at one vertex into visits"""

    mid_vertex: int
    visits: Tuple[Visit, ...]

    def __post_init__(self):
        edges: List[int] = []
        for visit in self.visits:
            if visit.mid_vertex != self.mid_vertex:
                raise TrailError(f"visit {visit} is not a visit to {self.mid_vertex}")
            edges.extend((visit.entry_edge, visit.exit_edge))
        if len(edges) != len(set(edges)):
            raise TrailError(f"visits at {self.mid_vertex} share an edge")

    def covers(self, multigraph: Multigraph) -> bool:
        """True if the visits use every edge at the vertex exactly once"""
        edges = sorted(e for v in self.visits for e in (v.entry_edge, v.exit_edge))
        return edges == sorted(multigraph.incidence[self.mid_vertex])

    def twin_pairs(self) -> List[Tuple[Visit, Visit]]:
        return twin_pairs(self.visits)

    def has_twins(self) -> bool:
        return bool(self.twin_pairs())


def twin_pairs(visits: Sequence[Visit]) -> List[Tuple[Visit, Visit]]:
    """All unordered pairs of twin visits, in list order"""
    pairs = []
    for i, p in enumerate(visits):
        for q in visits[i + 1:]:
            if p.is_twin_of(q):
                pairs.append((p, q))
    return pairs


def visit_at(trail: Trail, i: int) -> Visit:
    """
    The visit at position i of a trail.

    Positions 1..l-1 are interior; a closed trail also has the
    wrap-around visit at position 0.
    """
    vs, es = trail.vertices, trail.edges
    if trail.closed and i == 0:
        return Visit(vs[-2], vs[0], vs[1], es[-1], es[0])
    if not 0 < i < trail.length:
        raise TrailError(f"no visit at position {i} of an open trail of length {trail.length}")
    return Visit(vs[i - 1], vs[i], vs[i + 1], es[i - 1], es[i])


def visit_positions(trail: Trail) -> Iterable[int]:
    """Positions that carry a visit"""
    start = 0 if trail.closed else 1
    return range(start, trail.length)


def visits_of_trail(trail: Trail, x: int) -> List[Visit]:
    """
    The visits to x induced by a trail, in trail order.

    Raises:
        TrailError: If x is an endpoint of an open trail; those visit
            sets are undefined
    """
    if not trail.closed and x in (trail.vertices[0], trail.vertices[-1]):
        raise TrailError(f"vertex {x} is an endpoint of an open trail")
    return [visit_at(trail, i) for i in visit_positions(trail) if trail.vertices[i] == x]


def all_visits(trail: Trail) -> Dict[int, List[Visit]]:
    """Visits grouped by mid-vertex, skipping the endpoints of open trails"""
    grouped: Dict[int, List[Visit]] = {}
    for i in visit_positions(trail):
        grouped.setdefault(trail.vertices[i], []).append(visit_at(trail, i))
    if not trail.closed:
        for end in (trail.vertices[0], trail.vertices[-1]):
            grouped.pop(end, None)
    return grouped


def locate(trail: Trail, visit: Visit) -> int:
    """Position of a visit in a trail, matched up to orientation"""
    for i in visit_positions(trail):
        if trail.vertices[i] == visit.mid_vertex and visit_at(trail, i).key == visit.key:
            return i
    raise TrailError(f"visit {visit} is not induced by the trail")


def find_visit(trail: Trail, visit: Visit) -> Optional[Visit]:
    """The trail's own orientation of a visit, or None if absent"""
    try:
        return visit_at(trail, locate(trail, visit))
    except TrailError:
        return None


def induced_decomposition(trail: Trail, x: int) -> VisitDecomposition:
    return VisitDecomposition(x, tuple(visits_of_trail(trail, x)))


def is_compatible(visits: Sequence[Visit], pattern: Iterable[Tuple[int, int]]) -> bool:
    """
    Compatibility of induced visits with a vertex-level pattern.

    Every (a, b) in the pattern must be matched by a distinct visit
    reading (a, x, b) or (b, x, a).
    """
    available = Counter(v.ends for v in visits)
    for a, b in pattern:
        key = (a, b) if a <= b else (b, a)
        if available[key] == 0:
            return False
        available[key] -= 1
    return True
