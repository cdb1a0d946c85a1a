"""
Shortest odd paths for threearc

Minimal odd length matters to the same-tail construction: it is what
keeps the special vertex off the interior of the path. The search is an
exhaustive iterative deepening over odd lengths, which is fine for the
graph sizes the oracles can confirm.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import networkx as nx

from threearc.core.errors import GraphError
from threearc.core.graph import Edge, SimpleGraph, check_vertex, normalize_edge


@dataclass(frozen=True)
class OddPath:
    """Simple path x0, x1, ..., xl of odd length l"""

    vertices: Tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 2 or len(self.vertices) % 2:
            raise GraphError(f"path {self.vertices} does not have odd length")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError(f"path {self.vertices} is not simple")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def edge(self, j: int) -> Edge:
        """The edge {x_j, x_(j+1)}"""
        return normalize_edge(self.vertices[j], self.vertices[j + 1])

    def edges(self) -> List[Edge]:
        return [self.edge(j) for j in range(self.length)]

    @property
    def even_edges(self) -> List[Edge]:
        """E0: edges {x_j, x_(j+1)} with j even, including the first and last"""
        return [self.edge(j) for j in range(0, self.length, 2)]

    @property
    def odd_edges(self) -> List[Edge]:
        """E1: edges {x_j, x_(j+1)} with j odd"""
        return [self.edge(j) for j in range(1, self.length, 2)]

    def position(self, v: int) -> Optional[int]:
        try:
            return self.vertices.index(v)
        except ValueError:
            return None

    def reversed(self) -> "OddPath":
        return OddPath(self.vertices[::-1])

    def is_path_of(self, graph: SimpleGraph) -> bool:
        return all(graph.has_edge(a, b) for a, b in zip(self.vertices, self.vertices[1:]))


def shortest_odd_path(graph: SimpleGraph, a: int, b: int) -> Optional[OddPath]:
    """
    Find a simple a-b path of minimum odd length.

    Lengths 1, 3, 5, ... are tried in turn; each round is a depth-first
    search over neighbours in ascending order, pruned by the distance
    to b. The first path found is returned, so the result is
    deterministic.

    Args:
        graph: The graph
        a: Start vertex
        b: End vertex, distinct from a

    Returns:
        The path, or None if every simple a-b path has even length

    Raises:
        GraphError: If a == b or a vertex is out of range
    """
    check_vertex(graph, a)
    check_vertex(graph, b)
    if a == b:
        raise GraphError(f"odd path endpoints must differ, got {a} twice")

    distance: Dict[int, int] = nx.single_source_shortest_path_length(graph.to_networkx(), b)
    if a not in distance:
        return None

    def extend(path: List[int], on_path: set, remaining: int) -> Optional[List[int]]:
        v = path[-1]
        if remaining == 0:
            return path if v == b else None
        for w in graph.neighbors(v):
            if w in on_path or w not in distance or distance[w] > remaining - 1:
                continue
            if w == b and remaining > 1:
                continue
            path.append(w)
            on_path.add(w)
            found = extend(path, on_path, remaining - 1)
            if found is not None:
                return found
            path.pop()
            on_path.discard(w)
        return None

    for length in range(max(1, distance[a]), graph.vertex_count, 1):
        if length % 2 == 0:
            continue
        found = extend([a], {a}, length)
        if found is not None:
            logging.debug(f"Shortest odd path {a}-{b} has length {length}")
            return OddPath(tuple(found))
    return None


def first_pair_without_odd_path(graph: SimpleGraph) -> Optional[Tuple[int, int]]:
    """Lexicographically first pair a < b joined by no odd simple path"""
    for a in range(graph.vertex_count):
        for b in range(a + 1, graph.vertex_count):
            if shortest_odd_path(graph, a, b) is None:
                return a, b
    return None


def has_all_pairs_odd_paths(graph: SimpleGraph) -> bool:
    """Whether every two distinct vertices are joined by a path of odd length"""
    return first_pair_without_odd_path(graph) is None
