"""
Joins of two graphs for threearc

The join G v H keeps both graphs and adds every edge between them. When
one side has minimum degree at least 2, the join meets the Hamilton path
hypotheses, so its 3-arc graph is Hamilton-connected.
"""

import networkx as nx

from threearc.core.errors import GraphError, HypothesisError
from threearc.core.graph import Arc, SimpleGraph
from threearc.hamilton.path import CertifiedPath, hamilton_path_of_X


def join(first: SimpleGraph, second: SimpleGraph) -> SimpleGraph:
    """
    The join of two graphs.

    Vertices of the first graph keep their labels; vertex i of the
    second becomes n + i, where n is the order of the first.
    """
    if first.vertex_count == 0 or second.vertex_count == 0:
        raise GraphError("both sides of a join need at least one vertex")
    union = nx.disjoint_union(first.to_networkx(), second.to_networkx())
    n = first.vertex_count
    union.add_edges_from((a, n + b) for a in range(n) for b in range(second.vertex_count))
    return SimpleGraph.from_networkx(union)


def join_hypothesis(first: SimpleGraph, second: SimpleGraph) -> bool:
    """max(min degree of G, min degree of H) >= 2"""
    return max(first.min_degree, second.min_degree) >= 2


def hamilton_path_of_join(first: SimpleGraph, second: SimpleGraph, start: Arc, end: Arc) -> CertifiedPath:
    """
    Hamilton path of X(G v H) between two arcs of the join.

    Raises:
        HypothesisError: If neither side has minimum degree at least 2
    """
    if not join_hypothesis(first, second):
        raise HypothesisError("neither side of the join has minimum degree at least 2")
    return hamilton_path_of_X(join(first, second), start, end)
