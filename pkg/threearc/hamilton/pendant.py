"""
Pendant vertices and window trails for threearc

Both path constructions add two degree-one vertices t and t' to an
Eulerian multigraph, so that an Eulerian trail from t to t' has fixed
first and last visits.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from threearc.core.errors import GraphError, TrailError
from threearc.core.graph import Arc, Multigraph, Trail
from threearc.euler.matching import VisitArcGraph
from threearc.euler.visits import Visit, locate, visit_at, visits_of_trail


@dataclass(frozen=True)
class PendantTrailGraph:
    """
    A base multigraph with pendant vertices t (at t_attach) and t' (at t_prime_attach)

    Attributes:
        base: The multigraph before attachment
        multigraph: The base plus the two pendant vertices and edges
        t, t_prime: Pendant vertex ids, base.vertex_count and the next one
        t_edge, t_prime_edge: Ids of the two pendant edges
    """

    base: Multigraph
    multigraph: Multigraph
    t: int
    t_prime: int
    t_attach: int
    t_prime_attach: int
    t_edge: int
    t_prime_edge: int

    def __post_init__(self):
        for pendant in (self.t, self.t_prime):
            if self.multigraph.degree(pendant) != 1:
                raise GraphError(f"pendant vertex {pendant} does not have degree 1")
        for v in range(self.base.vertex_count):
            if self.multigraph.degree(v) % 2:
                raise GraphError(f"vertex {v} has odd degree after attaching pendants")

    def without_pendants(self) -> Multigraph:
        """The base multigraph, recovered by deleting t and t'"""
        n = self.multigraph.vertex_count - 2
        ends = tuple(
            e for eid, e in enumerate(self.multigraph.ends) if eid not in (self.t_edge, self.t_prime_edge)
        )
        return Multigraph(n, ends)


def attach_pendants(base: Multigraph, at_t: int, at_t_prime: int) -> PendantTrailGraph:
    """Join new vertices t = n and t' = n+1 to at_t and at_t_prime by single edges"""
    n, m = base.vertex_count, base.edge_count
    extended = base.extended(2, [(at_t, n), (at_t_prime, n + 1)])
    return PendantTrailGraph(base, extended, n, n + 1, at_t, at_t_prime, m, m + 1)


def window_trail(tour: Trail, visit: Visit, pendants: PendantTrailGraph) -> Trail:
    """
    Open the closed tour at a visit (z1, x, z2) into t, x, z2, ..., z1, x, t'.

    The tour's orientation is kept, so the first visit of the result is
    (t, x, z2) and the last is (z1, x, t').

    Raises:
        TrailError: If the tour is open, the visit is not induced, or the
            pendants are not both attached to the visit's mid-vertex
    """
    if not tour.closed:
        raise TrailError("only a closed tour can be opened at a visit")
    x = visit.mid_vertex
    if pendants.t_attach != x or pendants.t_prime_attach != x:
        raise TrailError(f"pendants are not attached to {x}")
    rotated = tour.rotate(locate(tour, visit))
    vertices = (pendants.t,) + rotated.vertices + (pendants.t_prime,)
    edges = (pendants.t_edge,) + rotated.edges + (pendants.t_prime_edge,)
    return Trail(vertices, edges, False)


def first_visit(trail: Trail) -> Visit:
    return visit_at(trail, 1)


def last_visit(trail: Trail) -> Visit:
    return visit_at(trail, trail.length - 1)


def build_K_and_L(window: Trail, arcs: Sequence[Arc]) -> Tuple[VisitArcGraph, VisitArcGraph]:
    """
    The bipartite graphs K and L of a window trail t, x, z2, ..., z1, x, t'.

    K joins the visits of the window at x to A(x). L drops the first and
    last visits and the arcs x>z1, x>z2 from K.

    The anchor visit (z1, x, z2) is not passed separately: window_trail
    opened the tour at it, so it is read back from the window's first and
    last visits. A(x) comes from the simple graph because the pendant
    multigraph has extra edges at x.

    Args:
        window: Output of window_trail
        arcs: A(x) of the simple graph

    Raises:
        TrailError: If the window is not of the t, x, ..., x, t' form
    """
    vs = window.vertices
    if window.closed or window.length < 4 or vs[1] != vs[-2]:
        raise TrailError("not a window trail")
    x = vs[1]
    visits = visits_of_trail(window, x)
    first, last = first_visit(window), last_visit(window)
    if visits[0].key != first.key or visits[-1].key != last.key:
        raise TrailError("window trail does not start and end with visits to x")
    k_graph = VisitArcGraph(tuple(visits), tuple(arcs))

    z2, z1 = vs[2], vs[-3]
    dropped = {Arc(x, z1), Arc(x, z2)}
    inner: List[Visit] = visits[1:-1]
    l_graph = VisitArcGraph(tuple(inner), tuple(a for a in arcs if Arc(*a) not in dropped))
    return k_graph, l_graph
