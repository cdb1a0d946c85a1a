"""
The split graph used by the 3-arc connectivity criterion
"""

import logging
from typing import List, Tuple

from threearc.core.graph import SimpleGraph


def hat_graph(graph: SimpleGraph) -> SimpleGraph:
    """
    Replace every degree-two vertex by two non-adjacent vertices.

    A degree-two vertex v with neighbours u < w keeps its index for the
    copy attached to u; the copy attached to w gets a fresh index
    n, n+1, ... in increasing order of v.

    Args:
        graph: Any simple graph

    Returns:
        The split graph; equal to the input when no vertex has degree two
    """
    n = graph.vertex_count
    split = graph.degree_class(2)
    if not split:
        return graph

    far_copy = {v: n + k for k, v in enumerate(split)}

    def endpoint(v: int, towards: int) -> int:
        # copy of v used by the edge to `towards`
        if v in far_copy and towards == graph.neighbors(v)[1]:
            return far_copy[v]
        return v

    edges: List[Tuple[int, int]] = [(endpoint(a, b), endpoint(b, a)) for a, b in graph.edges()]
    logging.debug(f"Split {len(split)} degree-two vertices")
    return SimpleGraph.from_edges(n + len(split), edges)
