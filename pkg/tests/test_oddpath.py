import networkx as nx
import pytest

from threearc.core.errors import GraphError
from threearc.core.graph import SimpleGraph
from threearc.hamilton.oddpath import (
    OddPath,
    first_pair_without_odd_path,
    has_all_pairs_odd_paths,
    shortest_odd_path,
)

from conftest import graph_of


def test_odd_path_partition():
    path = OddPath((1, 0, 3, 2))
    assert path.length == 3
    assert path.even_edges == [(0, 1), (2, 3)]
    assert path.odd_edges == [(0, 3)]
    assert path.position(3) == 2
    assert path.position(7) is None
    assert path.reversed().vertices == (2, 3, 0, 1)


@pytest.mark.parametrize("vertices", [(0,), (0, 1, 2), (0, 1, 0, 1)])
def test_odd_path_validation(vertices):
    with pytest.raises(GraphError):
        OddPath(vertices)


def test_adjacent_vertices_give_length_one(k4):
    assert shortest_odd_path(k4, 0, 1).vertices == (0, 1)


def test_bipartite_same_side_has_no_odd_path(k33):
    # K3,3 from networkx: 0, 1, 2 on one side
    assert shortest_odd_path(k33, 0, 1) is None
    assert shortest_odd_path(k33, 0, 3).length == 1
    assert first_pair_without_odd_path(k33) == (0, 1)
    assert not has_all_pairs_odd_paths(k33)


def test_odd_path_around_a_pentagon(c5):
    path = shortest_odd_path(c5, 0, 2)
    assert path.length == 3
    assert path.vertices == (0, 4, 3, 2)
    assert path.is_path_of(c5)


def test_endpoint_only_at_the_end():
    # triangle 0-1-2 with a pendant edge 2-3
    g = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert shortest_odd_path(g, 0, 1).vertices == (0, 1)
    assert shortest_odd_path(g, 0, 3).vertices == (0, 1, 2, 3)


def test_disconnected_and_bad_arguments():
    g = SimpleGraph.from_edges(4, [(0, 1), (2, 3)])
    assert shortest_odd_path(g, 0, 2) is None
    with pytest.raises(GraphError):
        shortest_odd_path(g, 1, 1)
    with pytest.raises(GraphError):
        shortest_odd_path(g, 0, 9)


def test_petersen_and_complete_graphs_have_all_odd_paths(petersen, k4, k5):
    assert has_all_pairs_odd_paths(petersen)
    assert has_all_pairs_odd_paths(k4)
    assert has_all_pairs_odd_paths(k5)


@pytest.mark.slow
def test_hamilton_connected_atlas_graphs_have_odd_paths():
    from threearc.verify.oracles import brute_force_hamilton_connected

    for g in nx.graph_atlas_g():
        if 4 <= g.number_of_nodes() <= 7 and nx.is_connected(g):
            graph = graph_of(g)
            if brute_force_hamilton_connected(graph):
                assert has_all_pairs_odd_paths(graph)
