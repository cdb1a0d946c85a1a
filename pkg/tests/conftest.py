"""
Shared fixtures for the threearc test suite

The Petersen graph uses outer vertices a1..a5 = 0..4 and inner
vertices b1..b5 = 5..9, with spokes ai-bi.
"""

import networkx as nx
import pytest

from threearc.core.graph import Arc, SimpleGraph, build_multigraph, trail_from_vertices, uniform_multiplicity

PETERSEN_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
    (5, 7), (5, 8), (6, 8), (6, 9), (7, 9),
]

# Closed tour of the doubled Petersen graph as printed with the example
_A = {i + 1: i for i in range(5)}
_B = {i + 1: i + 5 for i in range(5)}
PETERSEN_TOUR_NAMES = (
    "a1 a2 a3 a4 a5 a1 b1 b4 b2 b5 b3 b1 a1 a2 b2 b5 a5 a4 b4 b2 "
    "a2 a3 b3 b1 b4 a4 a3 b3 b5 a5 a1"
).split()

# The Hamilton cycle of X(Petersen) printed with the same example
PETERSEN_CYCLE = [
    (1, 6), (2, 7), (3, 8), (4, 9), (0, 1), (5, 7), (8, 3), (6, 1), (9, 4), (7, 2),
    (5, 8), (0, 4), (1, 2), (6, 8), (9, 7), (4, 0), (3, 2), (8, 5), (6, 9), (1, 0),
    (2, 3), (7, 9), (5, 0), (8, 6), (3, 4), (2, 1), (7, 5), (9, 6), (4, 3), (0, 5),
]


def graph_of(nx_graph: nx.Graph) -> SimpleGraph:
    return SimpleGraph.from_networkx(nx_graph)


def _vertex(name: str) -> int:
    table = _A if name[0] == "a" else _B
    return table[int(name[1:])]


@pytest.fixture
def petersen():
    return SimpleGraph.from_edges(10, PETERSEN_EDGES)


@pytest.fixture
def petersen_tour(petersen):
    doubled = build_multigraph(petersen, uniform_multiplicity(petersen, 2))
    vertices = [_vertex(name) for name in PETERSEN_TOUR_NAMES]
    return doubled, trail_from_vertices(doubled, vertices, closed=True)


@pytest.fixture
def petersen_cycle():
    return [Arc(*a) for a in PETERSEN_CYCLE]


@pytest.fixture
def k4():
    return graph_of(nx.complete_graph(4))


@pytest.fixture
def k5():
    return graph_of(nx.complete_graph(5))


@pytest.fixture
def k33():
    return graph_of(nx.complete_bipartite_graph(3, 3))


@pytest.fixture
def cube():
    return graph_of(nx.hypercube_graph(3))


@pytest.fixture
def prism():
    return graph_of(nx.circular_ladder_graph(3))


@pytest.fixture
def c5():
    return graph_of(nx.cycle_graph(5))


@pytest.fixture
def theta():
    """K4 with the edge 1-2 subdivided by vertex 4; satisfies the cycle conditions"""
    return SimpleGraph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3), (1, 4), (2, 4)])


@pytest.fixture
def write_graph(tmp_path):
    """Write edge-list text to a file and return its path as a string"""

    def write(text: str, name: str = "graph.g") -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write
