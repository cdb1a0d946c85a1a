#!/usr/bin/env python3
# threearc - path.py
# Revision: 1.0.0

"""
Hamilton paths of 3-arc graphs between two prescribed arcs for threearc

Both constructions take a shortest odd path P, double or triple edges of
G into an auxiliary multigraph, and build an Eulerian trail from a
pendant vertex t to a pendant vertex t' whose first and last visits map
to the prescribed arcs.

Same tail (arcs xy and xv): P joins y and v, the multigraph is
Eulerian with d*(x) = 2d(x) - 2, and the tour is opened at one visit to
x chosen by a case table on d(x) and the visits at x.

Distinct tails (arcs xy and uv, x != u): P joins x and u, t hangs off x
and t' off u, and the trail is grown from a fixed stub
t, x, x', x, x1, ..., u, u', u, t'.
"""

import logging
from dataclasses import dataclass
from typing import AbstractSet, Dict, FrozenSet, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from threearc.core.connectivity import is_edge_cut_pair
from threearc.core.errors import (
    ConstructionError,
    GraphError,
    HypothesisError,
    TrailExtensionError,
    UnhandledCaseError,
)
from threearc.core.graph import (
    Arc,
    Multigraph,
    SimpleGraph,
    Trail,
    build_multigraph,
    normalize_edge,
    uniform_multiplicity,
)
from threearc.euler.matching import Matching, VisitArcGraph, perfect_matching, pinned_perfect_matching
from threearc.euler.operations import bow_tie
from threearc.euler.repair import local_matchings, repair_twin_visits
from threearc.euler.tours import closed_subtour, euler_tour_through
from threearc.euler.visits import Visit, find_visit, twin_pairs, visits_of_trail
from threearc.hamilton.conditions import check_path_hypotheses
from threearc.hamilton.cycle import phi_sequence
from threearc.hamilton.oddpath import OddPath, shortest_odd_path
from threearc.hamilton.pendant import (
    PendantTrailGraph,
    attach_pendants,
    build_K_and_L,
    first_visit,
    last_visit,
    window_trail,
)
from threearc.verify.validators import validate_path

# Window rules for the same-tail construction, keyed by
# (case, d(x), shape of the visits at x other than the anchor)
LOOP_AWAY = "loop-away"
ANCHOR = "anchor"
TWIN_SWAP = "twin-swap"
TWINS = "twins"
ANCHOR_THEN_TWINS = "anchor-then-twins"

WINDOW_RULES = {
    (1, 3, "loops"): LOOP_AWAY,
    (1, 4, "loops"): ANCHOR,
    (1, 4, "twins"): TWIN_SWAP,
    (2, 3, "loops"): ANCHOR,
    (2, 4, "loops"): LOOP_AWAY,
    (2, 4, "twins"): TWINS,
}


@dataclass(frozen=True)
class CertifiedPath:
    """A Hamilton path of X(G) between two prescribed arcs"""

    arcs: Tuple[Arc, ...]
    endpoints: Tuple[Arc, Arc]
    verified: bool

    def __len__(self) -> int:
        return len(self.arcs)

    def lines(self) -> List[str]:
        return [str(arc) for arc in self.arcs]


class SameTailMultigraph(NamedTuple):
    """Auxiliary multigraph of the same-tail construction with its anchor visit (a, x, v)"""

    multigraph: Multigraph
    anchor: Visit
    case: int


def _check_degrees(graph: SimpleGraph, multigraph: Multigraph, deficit: Dict[int, int]) -> None:
    for z in range(graph.vertex_count):
        expected = 2 * graph.degree(z) - deficit.get(z, 0)
        if multigraph.degree(z) != expected:
            raise ConstructionError(
                f"vertex {z} has degree {multigraph.degree(z)} in the multigraph, expected {expected}"
            )


def build_same_tail_multigraph(
    graph: SimpleGraph, x: int, y: int, v: int, path: OddPath
) -> SameTailMultigraph:
    """
    Double, triple or keep single every edge for the arcs xy and xv.

    With x off the path (case 1): E0(P) tripled, E1(P) single, xy and xv
    single, the rest doubled; anchor (y, x, v). With x = x1 (case 2):
    E0(P) minus xy tripled, E1(P) and xv single, the rest (xy included)
    doubled; anchor (x2, x, v).

    Args:
        graph: The simple graph
        x: Common tail
        y: Head of the first arc
        v: Head of the second arc
        path: Shortest odd y-v path, normalized so that x is not x_(l-1)

    Returns:
        The multigraph, the anchor visit and the case number

    Raises:
        GraphError: If the arcs or the path do not fit, or x sits
            anywhere on P other than x1
        ConstructionError: If the degrees come out wrong
    """
    if not (graph.has_edge(x, y) and graph.has_edge(x, v)) or y == v:
        raise GraphError(f"{x}>{y} and {x}>{v} are not two distinct arcs")
    if path.start != y or path.end != v or not path.is_path_of(graph):
        raise GraphError(f"{path.vertices} is not a path from {y} to {v}")

    multiplicity = uniform_multiplicity(graph, 2)
    position = path.position(x)
    if position is None:
        case = 1
        for edge in path.even_edges:
            multiplicity[edge] = 3
        for edge in path.odd_edges:
            multiplicity[edge] = 1
        multiplicity[normalize_edge(x, y)] = 1
        multiplicity[normalize_edge(x, v)] = 1
        a = y
    elif position == 1:
        case = 2
        xy = normalize_edge(x, y)
        for edge in path.even_edges:
            if edge != xy:
                multiplicity[edge] = 3
        for edge in path.odd_edges:
            multiplicity[edge] = 1
        multiplicity[normalize_edge(x, v)] = 1
        a = path.vertices[2]
    else:
        raise GraphError(
            f"vertex {x} sits at position {position} of the odd path {path.vertices}; "
            f"only position 1 is possible on a shortest odd path"
        )

    multigraph = build_multigraph(graph, multiplicity)
    _check_degrees(graph, multigraph, {x: 2})
    anchor = Visit(a, x, v, multigraph.copies(x, a)[0], multigraph.copies(x, v)[0])
    logging.debug(f"Same-tail case {case} for {x}>{y}, {x}>{v}: P = {path.vertices}, anchor {anchor}")
    return SameTailMultigraph(multigraph, anchor, case)


def build_distinct_tail_multigraph(graph: SimpleGraph, x: int, u: int, path: OddPath) -> PendantTrailGraph:
    """
    Double every edge off P, triple E1(P), keep E0(P) single, then hang t off x and t' off u.

    Raises:
        GraphError: If P does not join x and u
        ConstructionError: If the degrees come out wrong
    """
    if path.start != x or path.end != u or not path.is_path_of(graph):
        raise GraphError(f"{path.vertices} is not a path from {x} to {u}")
    multiplicity = uniform_multiplicity(graph, 2)
    for edge in path.even_edges:
        multiplicity[edge] = 1
    for edge in path.odd_edges:
        multiplicity[edge] = 3
    multigraph = build_multigraph(graph, multiplicity)
    _check_degrees(graph, multigraph, {x: 1, u: 1})
    return attach_pendants(multigraph, x, u)


def choose_guard_neighbors(
    graph: SimpleGraph, x: int, y: int, u: int, v: int, path: OddPath
) -> Tuple[int, int]:
    """
    Pick x' in N(x) - {y, x1} and u' in N(u) - {v, x_(l-1)}.

    When d(x) = d(u) = 3, y = x1 and v = x_(l-1), the edges from x and u
    to their third neighbours must not form an edge cut; the choice is
    swapped until they do not.

    Raises:
        HypothesisError: If no valid choice exists
    """
    x1, last = path.vertices[1], path.vertices[-2]
    x_options = [w for w in graph.neighbors(x) if w not in (y, x1)]
    u_options = [w for w in graph.neighbors(u) if w not in (v, last)]
    if not x_options or not u_options:
        raise HypothesisError(f"no guard neighbour for {x} or {u}; minimum degree is below 3")

    degenerate = graph.degree(x) == 3 and graph.degree(u) == 3 and y == x1 and v == last
    if not degenerate:
        return x_options[0], u_options[0]

    for x_guard in x_options:
        z = next(w for w in x_options if w != x_guard)
        for u_guard in u_options:
            w = next(c for c in u_options if c != u_guard)
            if not is_edge_cut_pair(graph, (x, z), (u, w)):
                logging.debug(f"Guards {x_guard}, {u_guard}; deferred edges {x}-{z}, {u}-{w}")
                return x_guard, u_guard
    raise HypothesisError(f"every guard choice at {x} and {u} leaves a 2-edge cut")


def open_euler_trail_with_anchors(
    pendants: PendantTrailGraph,
    stub: Trail,
    pinned: AbstractSet[FrozenSet[int]] = frozenset(),
    deferred: Sequence[Tuple[int, int, Tuple[int, int]]] = (),
) -> Trail:
    """
    Extend a trail from t to t' to an Eulerian trail of the pendant graph.

    Closed sub-tours of the unused edges are spliced in at interior
    positions whose visit is not pinned; the first and last visits are
    always pinned. Deferred pairs of parallel edges (mid, far, copies)
    are left out of the sub-tours and inserted afterwards as a visit
    (far, mid, far) at the first interior occurrence of far.

    Args:
        pendants: The pendant graph
        stub: Open trail from t to t'
        pinned: Edge-pair keys of visits that must survive
        deferred: Parallel edge pairs to insert last

    Returns:
        An Eulerian trail from t to t' inducing every pinned visit

    Raises:
        TrailExtensionError: If the stub cannot be extended
    """
    multigraph = pendants.multigraph
    stub.check(multigraph)
    if stub.closed or stub.vertices[0] != pendants.t or stub.vertices[-1] != pendants.t_prime:
        raise TrailExtensionError("stub must be an open trail from t to t'")

    held = {e for _, _, pair in deferred for e in pair}
    remaining = set(range(multigraph.edge_count)) - set(stub.edges) - held
    keep = set(pinned) | {first_visit(stub).key, last_visit(stub).key}
    vertices, edges = list(stub.vertices), list(stub.edges)

    while remaining:
        position = None
        for i in range(1, len(edges)):
            free = any(e in remaining for e in multigraph.incidence[vertices[i]])
            if free and frozenset((edges[i - 1], edges[i])) not in keep:
                position = i
                break
        if position is None:
            raise TrailExtensionError(
                f"{len(remaining)} edges cannot be reached from the stub",
                Trail(tuple(vertices), tuple(edges), False).format(),
            )
        sub = closed_subtour(multigraph, vertices[position], remaining)
        vertices[position:position + 1] = sub.vertices
        edges[position:position] = sub.edges
        remaining -= set(sub.edges)

    for mid, far, (e1, e2) in deferred:
        k = next((i for i in range(1, len(edges)) if vertices[i] == far), None)
        if k is None:
            raise TrailExtensionError(f"vertex {far} never occurs inside the trail")
        vertices[k + 1:k + 1] = [mid, far]
        edges[k:k] = [e1, e2]

    trail = Trail(tuple(vertices), tuple(edges), False)
    trail.check(multigraph)
    if not trail.covers(multigraph):
        raise TrailExtensionError(
            f"extended trail covers {trail.length} of {multigraph.edge_count} edges", trail.format()
        )
    return trail


def _shape(visits: Sequence[Visit]) -> str:
    if all(p.is_loop() for p in visits):
        return "loops"
    if twin_pairs(visits):
        return "twins"
    return "mixed"


def _window_candidates(
    tour: Trail, built: SameTailMultigraph, graph: SimpleGraph, y: int, v: int
) -> Iterator[Tuple[Trail, Visit]]:
    """(tour, visit) pairs to open the tour at, in the order the case table prescribes"""
    x = built.anchor.mid_vertex
    anchor = find_visit(tour, built.anchor)
    if anchor is None:
        raise ConstructionError(f"anchor {built.anchor} was lost", tour.format())
    others = [p for p in visits_of_trail(tour, x) if p.key != anchor.key]
    d = graph.degree(x)

    if d >= 5:
        rule = ANCHOR_THEN_TWINS
    else:
        rule = WINDOW_RULES.get((built.case, d, _shape(others)))
        if rule is None:
            raise UnhandledCaseError(
                f"case {built.case}, d(x) = {d}, visits at {x}: {', '.join(map(str, others))}",
                tour.format(),
            )
    logging.debug(f"Window rule {rule} at vertex {x}")

    if rule == LOOP_AWAY:
        for p in others:
            if p.is_loop() and p.entry_vertex not in (y, v):
                yield tour, p
    elif rule == ANCHOR:
        yield tour, anchor
    elif rule == TWIN_SWAP:
        first, second = twin_pairs(others)[0]
        swapped = bow_tie(tour, first, anchor)
        yield swapped, second
    elif rule == TWINS:
        for pair in twin_pairs(others):
            yield from ((tour, p) for p in pair)
    else:
        yield tour, anchor
        pairs = twin_pairs(others)
        if d != 5 or not pairs:
            raise UnhandledCaseError(
                f"anchor window fails at {x} with d(x) = {d} and no twin visits", tour.format()
            )
        for pair in pairs:
            yield from ((tour, p) for p in pair)


def _open_same_tail(
    tour: Trail, built: SameTailMultigraph, graph: SimpleGraph, y: int, v: int
) -> Tuple[Trail, Matching, PendantTrailGraph]:
    """Find a window trail whose K has a matching sending the first visit to xy and the last to xv"""
    x = built.anchor.mid_vertex
    pendants = attach_pendants(built.multigraph, x, x)
    arcs = graph.arcs_from(x)
    for candidate, visit in _window_candidates(tour, built, graph, y, v):
        for oriented in (candidate, candidate.reversed()):
            window = window_trail(oriented, find_visit(oriented, visit), pendants)
            k_graph, l_graph = build_K_and_L(window, arcs)
            pins = [(first_visit(window), Arc(x, y)), (last_visit(window), Arc(x, v))]
            matching = pinned_perfect_matching(k_graph, pins)
            if matching is not None:
                logging.debug(
                    f"Opened at {visit}; L has a perfect matching: "
                    f"{l_graph.balanced and perfect_matching(l_graph) is not None}"
                )
                return window, matching, pendants
    raise UnhandledCaseError(f"no window at {x} matches {x}>{y} and {x}>{v}", tour.format())


def _collect_matchings(trail: Trail, multigraph: Multigraph, exempt: AbstractSet[int]) -> Dict[int, Matching]:
    matchings: Dict[int, Matching] = {}
    for z, matching in local_matchings(trail, multigraph, exempt).items():
        if matching is None:
            raise ConstructionError(f"vertex {z} lacks a perfect matching", trail.format())
        matchings[z] = matching
    return matchings


def _same_tail_path(graph: SimpleGraph, x: int, y: int, v: int) -> List[Arc]:
    path = shortest_odd_path(graph, y, v)
    if path is None:
        raise HypothesisError(f"no odd path between {y} and {v}")
    flipped = path.length > 1 and path.vertices[-2] == x
    if flipped:
        y, v, path = v, y, path.reversed()

    built = build_same_tail_multigraph(graph, x, y, v, path)
    tour = euler_tour_through(built.multigraph, built.anchor)
    tour = repair_twin_visits(tour, built.multigraph, protected=built.anchor, exempt={x})
    window, matching, pendants = _open_same_tail(tour, built, graph, y, v)

    matchings = _collect_matchings(window, pendants.multigraph, {x})
    matchings[x] = matching
    arcs = phi_sequence(window, matchings)
    return arcs[::-1] if flipped else arcs


def _pinned_endpoint(trail: Trail, graph: SimpleGraph, vertex: int, end: Visit, arc: Arc) -> Optional[Matching]:
    k_graph = VisitArcGraph(tuple(visits_of_trail(trail, vertex)), tuple(graph.arcs_from(vertex)))
    return pinned_perfect_matching(k_graph, [(end, arc)])


def _settle_endpoint(trail: Trail, graph: SimpleGraph, x: int, y: int, x1: int, guard: int) -> Trail:
    """
    Make the first visit (t, x, x') matchable to xy.

    When it is not, the visit (x', x, x1) is bow-tied with the loop
    (y, x, y) if d(x) = 3, or with one of two twin visits if d(x) = 4
    and y = x1.

    Raises:
        UnhandledCaseError: If neither rewrite applies or helps
    """
    arc = Arc(x, y)
    if _pinned_endpoint(trail, graph, x, first_visit(trail), arc) is not None:
        return trail

    others = visits_of_trail(trail, x)[1:]
    bridge = next((q for q in others if set(q.ends) == {guard, x1}), None)
    d = graph.degree(x)
    partners: List[Visit] = []
    if bridge is not None and d == 3 and y != x1:
        partners = [q for q in others if q.is_loop() and q.entry_vertex == y]
    elif bridge is not None and d == 4 and y == x1:
        partners = [q for pair in twin_pairs(others) for q in pair]

    for q in partners:
        candidate = bow_tie(trail, bridge, q)
        if _pinned_endpoint(candidate, graph, x, first_visit(candidate), arc) is not None:
            logging.debug(f"Bow-tie of {bridge} and {q} frees {x}>{y}")
            return candidate
    raise UnhandledCaseError(
        f"first visit at {x} cannot be matched to {arc}: visits {', '.join(map(str, others))}",
        trail.format(),
    )


def _distinct_tail_path(graph: SimpleGraph, x: int, y: int, u: int, v: int) -> List[Arc]:
    path = shortest_odd_path(graph, x, u)
    if path is None:
        raise HypothesisError(f"no odd path between {x} and {u}")
    pendants = build_distinct_tail_multigraph(graph, x, u, path)
    multigraph = pendants.multigraph
    x1, last = path.vertices[1], path.vertices[-2]
    x_guard, u_guard = choose_guard_neighbors(graph, x, y, u, v, path)

    cx, cu = multigraph.copies(x, x_guard), multigraph.copies(u, u_guard)
    path_edges = tuple(multigraph.copies(a, b)[0] for a, b in zip(path.vertices, path.vertices[1:]))
    stub = Trail(
        (pendants.t, x, x_guard) + path.vertices + (u_guard, u, pendants.t_prime),
        (pendants.t_edge, cx[0], cx[1]) + path_edges + (cu[0], cu[1], pendants.t_prime_edge),
        False,
    )

    pinned = set()
    deferred = []
    if graph.degree(x) == 3 and y == x1:
        pinned.add(frozenset((cx[1], path_edges[0])))
        z = next(w for w in graph.neighbors(x) if w not in (y, x_guard))
        deferred.append((x, z, tuple(multigraph.copies(x, z))))
    if graph.degree(u) == 3 and v == last:
        pinned.add(frozenset((path_edges[-1], cu[0])))
        w = next(c for c in graph.neighbors(u) if c not in (v, u_guard))
        deferred.append((u, w, tuple(multigraph.copies(u, w))))

    trail = open_euler_trail_with_anchors(pendants, stub, pinned, deferred)
    trail = repair_twin_visits(trail, multigraph, exempt={x, u, pendants.t, pendants.t_prime})
    trail = _settle_endpoint(trail, graph, x, y, x1, x_guard)
    trail = _settle_endpoint(trail.reversed(), graph, u, v, last, u_guard).reversed()

    matchings = _collect_matchings(trail, multigraph, {x, u})
    matchings[x] = _pinned_endpoint(trail, graph, x, first_visit(trail), Arc(x, y))
    matchings[u] = _pinned_endpoint(trail, graph, u, last_visit(trail), Arc(u, v))
    if matchings[x] is None or matchings[u] is None:
        raise ConstructionError("endpoint matching lost while settling the other end", trail.format())
    return phi_sequence(trail, matchings)


def hamilton_path_of_X(graph: SimpleGraph, first: Arc, second: Arc) -> CertifiedPath:
    """
    Construct a verified Hamilton path of X(G) from one arc to another.

    Args:
        graph: 2-edge-connected graph with minimum degree 3 and an odd
            path between every two vertices
        first: Start arc
        second: End arc, distinct from the start

    Returns:
        The path, starting at first and ending at second

    Raises:
        GraphError: If an arc is not an arc of G or the arcs coincide
        HypothesisError: If a hypothesis fails; carries the report
        ConstructionError: If any internal step or the final validation
            fails
    """
    first, second = graph.arc(*first), graph.arc(*second)
    if first == second:
        raise GraphError(f"the two arcs must differ, got {first} twice")
    report = check_path_hypotheses(graph)
    if not report.all_ok:
        raise HypothesisError(f"path hypotheses fail: {', '.join(report.failed_clauses())}", report)

    if first.tail == second.tail:
        arcs = _same_tail_path(graph, first.tail, first.head, second.head)
    else:
        arcs = _distinct_tail_path(graph, first.tail, first.head, second.tail, second.head)

    error = validate_path(graph, arcs, (first, second))
    if error is not None:
        raise ConstructionError(
            f"constructed path {first} .. {second} failed validation: {error}",
            " ".join(map(str, arcs)),
        )
    logging.debug(f"Certified Hamilton path {first} .. {second}")
    return CertifiedPath(tuple(arcs), (first, second), True)


def hamilton_paths_all_pairs(graph: SimpleGraph) -> Iterator[CertifiedPath]:
    """Certified Hamilton paths for every ordered pair of distinct arcs"""
    arcs = graph.arcs()
    for first in arcs:
        for second in arcs:
            if first != second:
                yield hamilton_path_of_X(graph, first, second)
