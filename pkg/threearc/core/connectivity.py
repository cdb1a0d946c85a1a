"""
Connectivity predicates for threearc
"""

import networkx as nx

from threearc.core.errors import GraphError
from threearc.core.graph import Edge, SimpleGraph, normalize_edge


def is_connected(graph: SimpleGraph) -> bool:
    if graph.vertex_count == 0:
        raise GraphError("connectivity of the empty graph is undefined")
    return nx.is_connected(graph.to_networkx())


def bridges(graph: SimpleGraph) -> list:
    """Bridges of the graph as sorted (u, v) pairs with u < v"""
    return sorted(normalize_edge(u, v) for u, v in nx.bridges(graph.to_networkx()))


def is_two_edge_connected(graph: SimpleGraph) -> bool:
    """Connected and without bridges"""
    return is_connected(graph) and not nx.has_bridges(graph.to_networkx())


def is_edge_cut_pair(graph: SimpleGraph, e1: Edge, e2: Edge) -> bool:
    """
    Check whether deleting two edges disconnects the graph.

    Args:
        graph: The graph
        e1: First edge, in either orientation
        e2: Second edge, distinct from the first

    Returns:
        True if G - {e1, e2} is disconnected
    """
    a, b = normalize_edge(*e1), normalize_edge(*e2)
    if a == b:
        raise GraphError(f"edge pair must be distinct, got {a} twice")
    for u, v in (a, b):
        if not graph.has_edge(u, v):
            raise GraphError(f"{u} {v} is not an edge")
    reduced = graph.to_networkx()
    reduced.remove_edges_from([a, b])
    return not nx.is_connected(reduced)
