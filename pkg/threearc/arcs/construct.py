#!/usr/bin/env python3
# threearc - construct.py
# Revision: 1.0.0

"""
3-arc graph construction for threearc

X(G) has the arcs of G as vertices; uv and xy are adjacent when
(v, u, x, y) is a 3-arc, i.e. both (v, u, x) and (u, x, y) are 2-paths.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Tuple

from threearc.core.connectivity import is_connected
from threearc.core.errors import ConstructionError, GraphError, SizeCapExceeded
from threearc.core.graph import Arc, SimpleGraph

DEFAULT_MAX_VERTICES = 1_000_000


@dataclass(frozen=True)
class ArcIndex:
    """Bijection between the arcs of G and the vertices 0..2|E(G)|-1 of X(G)"""

    arcs: Tuple[Arc, ...]
    _positions: Dict[Arc, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if list(self.arcs) != sorted(set(self.arcs)):
            raise GraphError("arc index must list distinct arcs in (tail, head) order")
        object.__setattr__(self, "_positions", {arc: i for i, arc in enumerate(self.arcs)})

    @classmethod
    def of(cls, graph: SimpleGraph) -> "ArcIndex":
        return cls(tuple(graph.arcs()))

    def __len__(self) -> int:
        return len(self.arcs)

    def index_of(self, arc: Arc) -> int:
        try:
            return self._positions[Arc(*arc)]
        except KeyError:
            raise GraphError(f"{arc[0]}>{arc[1]} is not an indexed arc") from None

    def arc_at(self, i: int) -> Arc:
        return self.arcs[i]

    def serialize(self) -> str:
        """One "index tail head" line per arc"""
        return "\n".join(f"{i} {a.tail} {a.head}" for i, a in enumerate(self.arcs)) + "\n"


def expected_size(graph: SimpleGraph) -> Tuple[int, int]:
    """
    Vertex and edge counts of X(G) from the degree sequence alone.

    Returns:
        (2|E(G)|, sum over edges uv of (d(u)-1)(d(v)-1))
    """
    edges = sum((graph.degree(u) - 1) * (graph.degree(v) - 1) for u, v in graph.edges())
    return 2 * graph.edge_count, edges


def three_arc_graph(graph: SimpleGraph) -> Tuple[SimpleGraph, ArcIndex]:
    """
    Construct the 3-arc graph X(G).

    Args:
        graph: The base graph, with at least one edge

    Returns:
        (X(G), index) where vertex i of X(G) is the arc index.arc_at(i)

    Raises:
        GraphError: If the graph has no edges
        ConstructionError: If the result disagrees with the size formulas
    """
    if graph.edge_count == 0:
        raise GraphError("the 3-arc graph of an edgeless graph is empty")

    index = ArcIndex.of(graph)
    adjacency: List[List[int]] = [[] for _ in range(len(index))]

    for i, (u, v) in enumerate(index.arcs):
        for x in graph.neighbors(u):
            if x == v:
                continue
            for y in graph.neighbors(x):
                if y == u:
                    continue
                adjacency[i].append(index.index_of(Arc(x, y)))

    xgraph = SimpleGraph(len(index), tuple(tuple(sorted(nbrs)) for nbrs in adjacency))

    if (xgraph.vertex_count, xgraph.edge_count) != expected_size(graph):
        raise ConstructionError(
            f"X(G) has {xgraph.vertex_count} vertices and {xgraph.edge_count} edges, "
            f"expected {expected_size(graph)}"
        )
    logging.debug(f"Built X(G) with {xgraph.vertex_count} vertices and {xgraph.edge_count} edges")
    return xgraph, index


def three_arc_levels(
    graph: SimpleGraph, levels: int, max_vertices: int = DEFAULT_MAX_VERTICES
) -> Iterator[Tuple[int, SimpleGraph, ArcIndex]]:
    """
    Yield (i, X^i(G), index of X^{i-1}(G)'s arcs) for i = 1..levels.

    The size of each level is predicted before it is built.

    Raises:
        GraphError: If an intermediate graph has no edges
        SizeCapExceeded: If a level would have more than max_vertices vertices
    """
    if levels < 1:
        raise GraphError(f"iteration count must be positive, got {levels}")
    current = graph
    for level in range(1, levels + 1):
        predicted = 2 * current.edge_count
        if predicted > max_vertices:
            raise SizeCapExceeded(
                f"X^{level}(G) would have {predicted} vertices, cap is {max_vertices}"
            )
        current, index = three_arc_graph(current)
        logging.info(f"X^{level}(G): {current.vertex_count} vertices, {current.edge_count} edges")
        yield level, current, index


def iterate_three_arc(
    graph: SimpleGraph, levels: int, max_vertices: int = DEFAULT_MAX_VERTICES
) -> SimpleGraph:
    """The i-fold 3-arc graph X^i(G)"""
    result = graph
    for _, result, _ in three_arc_levels(graph, levels, max_vertices):
        pass
    return result


def x_connected(graph: SimpleGraph) -> bool:
    """Whether X(G) is connected"""
    return is_connected(three_arc_graph(graph)[0])
