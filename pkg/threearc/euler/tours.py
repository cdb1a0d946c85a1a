#!/usr/bin/env python3
# threearc - tours.py
# Revision: 1.0.0

"""
Eulerian tours and trails for threearc

All tours come from one iterative Hierholzer walk over incidence lists
in ascending edge-id order. An optional random.Random shuffles the
lists, which is only ever used for fuzzing.
"""

import logging
import random
from typing import AbstractSet, Iterable, List, Optional, Tuple

from threearc.core.errors import GraphError, TrailExtensionError
from threearc.core.graph import Multigraph, Trail
from threearc.euler.visits import Visit


def _hierholzer(
    multigraph: Multigraph,
    start: int,
    allowed: Optional[AbstractSet[int]] = None,
    rng: Optional[random.Random] = None,
) -> Tuple[List[int], List[int]]:
    """
    Walk every allowed edge reachable from start.

    Returns:
        (vertices, edges) of the walk; closed when all allowed degrees in
        the component are even, otherwise it ends at the other odd vertex
    """
    incident: List[List[int]] = []
    for v in range(multigraph.vertex_count):
        edges = [e for e in multigraph.incidence[v] if allowed is None or e in allowed]
        if rng is not None:
            rng.shuffle(edges)
        incident.append(edges)

    used = [False] * multigraph.edge_count
    pointer = [0] * multigraph.vertex_count
    stack: List[Tuple[int, Optional[int]]] = [(start, None)]
    out: List[Tuple[int, Optional[int]]] = []

    while stack:
        v, _ = stack[-1]
        edges = incident[v]
        i = pointer[v]
        while i < len(edges) and used[edges[i]]:
            i += 1
        pointer[v] = i
        if i == len(edges):
            out.append(stack.pop())
        else:
            eid = edges[i]
            used[eid] = True
            stack.append((multigraph.other_end(eid, v), eid))

    out.reverse()
    return [v for v, _ in out], [e for _, e in out[1:]]


def _allowed_degrees(multigraph: Multigraph, allowed: Optional[AbstractSet[int]]) -> List[int]:
    if allowed is None:
        return [multigraph.degree(v) for v in range(multigraph.vertex_count)]
    degrees = [0] * multigraph.vertex_count
    for eid in allowed:
        u, v = multigraph.ends[eid]
        degrees[u] += 1
        degrees[v] += 1
    return degrees


def euler_tour(
    multigraph: Multigraph,
    start: int,
    rng: Optional[random.Random] = None,
    allowed: Optional[AbstractSet[int]] = None,
) -> Trail:
    """
    Closed Eulerian tour of a multigraph, or of the allowed edge subset.

    Args:
        multigraph: Multigraph with all degrees even
        start: Non-isolated start vertex
        rng: Shuffles incidence lists when given
        allowed: Restrict the tour to these edge ids

    Returns:
        Closed trail covering every (allowed) edge once

    Raises:
        GraphError: Odd degree, isolated start or disconnected edge set
    """
    degrees = _allowed_degrees(multigraph, allowed)
    odd = [v for v, d in enumerate(degrees) if d % 2]
    if odd:
        raise GraphError(f"vertices of odd degree: {odd}")
    if degrees[start] == 0:
        raise GraphError(f"start vertex {start} is isolated")

    vertices, edges = _hierholzer(multigraph, start, allowed, rng)
    total = multigraph.edge_count if allowed is None else len(allowed)
    if len(edges) != total:
        raise GraphError(f"edge set is disconnected: tour covers {len(edges)} of {total} edges")
    return Trail(tuple(vertices), tuple(edges), True)


def euler_tour_s2_compatible(multigraph: Multigraph, s2: Iterable[int]) -> Trail:
    """
    Eulerian tour of a doubled graph that bounces straight back at S2.

    Tours the doubled graph minus S2, then for every v in S2 (ascending)
    with neighbours u < w splices u, v, u in at the first occurrence of u
    and w, v, w at the first occurrence of w. Every visit to v then reads
    (u, v, u) or (w, v, w).

    Args:
        multigraph: The doubling of a graph meeting the cycle conditions
        s2: The degree-two vertices of that graph

    Returns:
        Closed Eulerian tour of the whole multigraph

    Raises:
        GraphError: If the preconditions fail
    """
    s2 = sorted(set(s2))
    s2_set = set(s2)
    core = {
        eid for eid, (u, v) in enumerate(multigraph.ends) if u not in s2_set and v not in s2_set
    }
    if not core:
        raise GraphError("no edges outside the degree-two vertices")
    start = min(v for v in range(multigraph.vertex_count) if v not in s2_set and multigraph.degree(v))
    tour = euler_tour(multigraph, start, allowed=core)

    vertices, edges = list(tour.vertices), list(tour.edges)
    for v in s2:
        nbrs = multigraph.neighbors(v)
        if len(nbrs) != 2 or multigraph.degree(v) != 4:
            raise GraphError(f"vertex {v} is not a doubled degree-two vertex")
        for u in nbrs:
            if u in s2_set:
                raise GraphError(f"degree-two vertices {u} and {v} are adjacent")
            e1, e2 = multigraph.copies(v, u)
            k = vertices.index(u)
            vertices[k + 1:k + 1] = [v, u]
            edges[k:k] = [e1, e2]
    logging.debug(f"Spliced {len(s2)} degree-two vertices into the core tour")
    return Trail(tuple(vertices), tuple(edges), True)


def euler_tour_through(multigraph: Multigraph, anchor: Visit) -> Trail:
    """
    Closed Eulerian tour inducing the given 2-trail.

    Removes the anchor's two edges, walks the rest from the anchor's exit
    vertex (which must end at its entry vertex) and closes the walk
    through the anchor. The result starts a, x, v, ...

    Raises:
        TrailExtensionError: If the walk misses edges, which happens when
            the anchor's two edges form an edge cut
    """
    anchor.check(multigraph)
    a, x, v = anchor.entry_vertex, anchor.mid_vertex, anchor.exit_vertex
    allowed = set(range(multigraph.edge_count)) - {anchor.entry_edge, anchor.exit_edge}
    if not allowed:
        raise TrailExtensionError(f"nothing to tour besides the anchor {anchor}")
    vertices, edges = _hierholzer(multigraph, v, allowed)
    if len(edges) != len(allowed) or vertices[-1] != a:
        raise TrailExtensionError(
            f"no Eulerian tour through {anchor}: walk from {v} covers {len(edges)} "
            f"of {len(allowed)} edges and ends at {vertices[-1]}"
        )
    return Trail(
        (a, x) + tuple(vertices), (anchor.entry_edge, anchor.exit_edge) + tuple(edges), True
    )


def closed_subtour(multigraph: Multigraph, start: int, allowed: AbstractSet[int]) -> Trail:
    """Closed tour of the allowed edges reachable from start; may miss other components"""
    vertices, edges = _hierholzer(multigraph, start, allowed)
    return Trail(tuple(vertices), tuple(edges), True)
