import networkx as nx
import pytest

from threearc.arcs.construct import three_arc_graph
from threearc.core.errors import GraphError
from threearc.core.graph import SimpleGraph
from threearc.hamilton.conditions import (
    check_conditions,
    check_path_hypotheses,
    hat_criterion,
    is_X_hamiltonian,
)
from threearc.verify.oracles import brute_force_hamiltonian

from conftest import graph_of


def two_k4s_joined_through_degree_two():
    edges = [(a, b) for a in range(4) for b in range(a + 1, 4)]
    edges += [(a + 4, b + 4) for a, b in edges]
    edges += [(0, 8), (8, 4), (1, 9), (9, 5)]
    return SimpleGraph.from_edges(10, edges)


def atlas(min_order, max_order):
    for g in nx.graph_atlas_g():
        if min_order <= g.number_of_nodes() <= max_order and nx.is_connected(g):
            yield graph_of(g)


def test_petersen_meets_all_conditions(petersen):
    report = check_conditions(petersen)
    assert report.all_ok
    assert report.failed_clauses() == []
    assert report.render().splitlines()[-1] == "X(G) hamiltonian: true"


def test_cycle_fails_b_and_c(c5):
    report = check_conditions(c5)
    assert not report.no_adjacent_degree2
    assert not report.core_connected
    assert report.min_degree_ok
    assert report.failed_clauses() == ["b", "c"]
    assert "(b) no adjacent degree-2 vertices: false" in report.render()


def test_leaves_fail_a():
    report = check_conditions(SimpleGraph.from_edges(3, [(0, 1), (1, 2)]))
    assert report.low_degree == (0, 2)
    assert "a" in report.failed_clauses()


def test_isolated_vertex_fails_a():
    report = check_conditions(SimpleGraph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (1, 3)]))
    assert report.low_degree == (4,)


def test_core_split_by_degree_two_vertices():
    report = check_conditions(two_k4s_joined_through_degree_two())
    assert report.min_degree_ok and report.no_adjacent_degree2
    assert not report.core_connected
    assert report.core_components == ((0, 1, 2, 3), (4, 5, 6, 7))


def test_degree_two_vertex_between_core_vertices(theta):
    assert is_X_hamiltonian(theta)
    assert hat_criterion(theta)


def test_empty_graph_is_rejected():
    with pytest.raises(GraphError):
        check_conditions(SimpleGraph(0, ()))


def test_conditions_agree_with_brute_force_up_to_five_vertices():
    for graph in atlas(3, 5):
        xg, _ = three_arc_graph(graph)
        assert is_X_hamiltonian(graph) == brute_force_hamiltonian(xg), graph.edges()


@pytest.mark.slow
def test_conditions_agree_with_brute_force_on_six_vertices():
    for graph in atlas(6, 6):
        xg, _ = three_arc_graph(graph)
        assert is_X_hamiltonian(graph) == brute_force_hamiltonian(xg), graph.edges()


def test_split_graph_criterion_agrees():
    for graph in atlas(3, 6):
        assert hat_criterion(graph) == is_X_hamiltonian(graph), graph.edges()


def test_path_hypotheses_hold_for_complete_graphs(k4, k5, petersen):
    for graph in (k4, k5, petersen):
        report = check_path_hypotheses(graph)
        assert report.all_ok
        assert report.failed_clauses() == []


def test_path_hypotheses_report_witnesses(k33, c5):
    bipartite = check_path_hypotheses(k33)
    assert bipartite.failed_clauses() == ["odd paths"]
    assert bipartite.pair_without_odd_path == (0, 1)
    assert "no odd path between 0 and 1" in bipartite.render()

    cycle = check_path_hypotheses(c5)
    assert not cycle.min_degree_ok
    assert cycle.low_degree == (0, 1, 2, 3, 4)


def test_path_hypotheses_find_bridges():
    g = SimpleGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    report = check_path_hypotheses(g)
    assert not report.two_edge_connected
    assert report.bridges == ((2, 3),)


def test_path_hypotheses_are_cached(k4):
    assert check_path_hypotheses(k4) is check_path_hypotheses(SimpleGraph.from_edges(4, k4.edges()))
