"""
Brute-force Hamiltonicity oracles for threearc

Exact backtracking over vertex bitmasks, extending from the lowest
vertex in ascending neighbour order. A branch is cut when the unvisited
vertices together with the current one are disconnected, or when some
unvisited vertex has fewer than two possible neighbours left on a cycle.
"""

import logging
from typing import List

from threearc.core.errors import GraphError, OracleCapExceeded
from threearc.core.graph import SimpleGraph, check_vertex

DEFAULT_ORACLE_MAX_VERTICES = 48


def _masks(graph: SimpleGraph) -> List[int]:
    masks = []
    for v in range(graph.vertex_count):
        mask = 0
        for w in graph.neighbors(v):
            mask |= 1 << w
        masks.append(mask)
    return masks


def _connected(mask: int, neighbours: List[int]) -> bool:
    """Whether the vertices in mask induce a connected subgraph"""
    if mask == 0:
        return True
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        v = low.bit_length() - 1
        fresh = neighbours[v] & mask & ~seen
        seen |= fresh
        frontier |= fresh
    return seen == mask


def _check_cap(graph: SimpleGraph, cap: int) -> None:
    if graph.vertex_count > cap:
        raise OracleCapExceeded(
            f"graph has {graph.vertex_count} vertices, oracle cap is {cap}"
        )


def brute_force_hamiltonian(graph: SimpleGraph, cap: int = DEFAULT_ORACLE_MAX_VERTICES) -> bool:
    """
    Decide whether a graph has a Hamilton cycle.

    Graphs with fewer than three vertices have none.

    Raises:
        OracleCapExceeded: If the graph has more than cap vertices
    """
    _check_cap(graph, cap)
    n = graph.vertex_count
    if n < 3:
        return False
    neighbours = _masks(graph)
    full = (1 << n) - 1
    if any(bin(m).count("1") < 2 for m in neighbours) or not _connected(full, neighbours):
        return False

    def feasible(current: int, remaining: int) -> bool:
        if not _connected(remaining | (1 << current), neighbours):
            return False
        allowed = remaining | (1 << current) | 1
        rest = remaining
        while rest:
            low = rest & -rest
            rest ^= low
            w = low.bit_length() - 1
            if bin(neighbours[w] & allowed).count("1") < 2:
                return False
        return True

    def extend(current: int, remaining: int) -> bool:
        if remaining == 0:
            return bool(neighbours[current] & 1)
        if not feasible(current, remaining):
            return False
        options = neighbours[current] & remaining
        while options:
            low = options & -options
            options ^= low
            if extend(low.bit_length() - 1, remaining ^ low):
                return True
        return False

    found = extend(0, full ^ 1)
    logging.debug(f"Hamiltonicity oracle on {n} vertices: {found}")
    return found


def brute_force_hamilton_path(
    graph: SimpleGraph, source: int, target: int, cap: int = DEFAULT_ORACLE_MAX_VERTICES
) -> bool:
    """
    Decide whether a Hamilton path joins source and target.

    Raises:
        GraphError: If a vertex is out of range
        OracleCapExceeded: If the graph has more than cap vertices
    """
    _check_cap(graph, cap)
    check_vertex(graph, source)
    check_vertex(graph, target)
    n = graph.vertex_count
    if source == target:
        return n == 1
    neighbours = _masks(graph)
    full = (1 << n) - 1
    target_bit = 1 << target

    def extend(current: int, remaining: int) -> bool:
        if remaining == 0:
            return current == target
        if not _connected(remaining | (1 << current), neighbours):
            return False
        options = neighbours[current] & remaining
        if remaining != target_bit:
            options &= ~target_bit
        while options:
            low = options & -options
            options ^= low
            if extend(low.bit_length() - 1, remaining ^ low):
                return True
        return False

    return extend(source, full ^ (1 << source))


def brute_force_hamilton_connected(graph: SimpleGraph, cap: int = DEFAULT_ORACLE_MAX_VERTICES) -> bool:
    """Whether every two distinct vertices are joined by a Hamilton path"""
    _check_cap(graph, cap)
    if graph.vertex_count == 0:
        raise GraphError("Hamilton-connectedness of the empty graph is undefined")
    for s in range(graph.vertex_count):
        for t in range(s + 1, graph.vertex_count):
            if not brute_force_hamilton_path(graph, s, t, cap):
                return False
    return True
