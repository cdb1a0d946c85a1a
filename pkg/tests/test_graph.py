import networkx as nx
import pytest

from threearc.core.connectivity import bridges, is_connected, is_edge_cut_pair, is_two_edge_connected
from threearc.core.errors import GraphError, MultiplicityError, TrailError
from threearc.core.graph import (
    Arc,
    Multigraph,
    SimpleGraph,
    Trail,
    build_multigraph,
    edge_multiset,
    normalize_edge,
    trail_from_vertices,
    uniform_multiplicity,
)

from conftest import graph_of


def test_from_edges_sorts_adjacency():
    g = SimpleGraph.from_edges(4, [(2, 0), (0, 1), (3, 0)])
    assert g.neighbors(0) == (1, 2, 3)
    assert g.edges() == [(0, 1), (0, 2), (0, 3)]
    assert g.edge_count == 3
    assert g.degree_class(1) == [1, 2, 3]


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)], [(0, 5)]])
def test_from_edges_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        SimpleGraph.from_edges(3, edges)


def test_asymmetric_adjacency_rejected():
    with pytest.raises(GraphError):
        SimpleGraph(2, ((1,), ()))


def test_arcs_sorted_by_tail_then_head(k4):
    arcs = k4.arcs()
    assert len(arcs) == 12
    assert arcs == sorted(arcs)
    assert k4.arcs_from(2) == [Arc(2, 0), Arc(2, 1), Arc(2, 3)]
    assert str(Arc(3, 1)) == "3>1"
    assert Arc(3, 1).reversed() == Arc(1, 3)


def test_arc_checks_membership(c5):
    assert c5.arc(0, 1) == Arc(0, 1)
    with pytest.raises(GraphError):
        c5.arc(0, 2)


def test_networkx_round_trip_relabels_in_sorted_order():
    g = nx.Graph([("b", "c"), ("a", "b")])
    simple = SimpleGraph.from_networkx(g)
    assert simple.edges() == [(0, 1), (1, 2)]
    assert sorted(simple.to_networkx().edges()) == [(0, 1), (1, 2)]


def test_min_degree_of_empty_graph():
    with pytest.raises(GraphError):
        _ = SimpleGraph(0, ()).min_degree


def test_build_multigraph_ids_follow_edge_order(k4):
    mult = uniform_multiplicity(k4, 2)
    mult[(1, 0)] = 3
    m = build_multigraph(k4, mult)
    assert m.edge_count == 13
    assert m.copies(0, 1) == [0, 1, 2]
    assert m.copies(1, 0) == [0, 1, 2]
    assert m.multiplicity(2, 3) == 2
    assert m.degree(0) == 7
    assert m.neighbors(0) == [1, 2, 3]


def test_build_multigraph_needs_positive_multiplicity(k4):
    mult = uniform_multiplicity(k4, 2)
    mult[(0, 1)] = 0
    with pytest.raises(MultiplicityError):
        build_multigraph(k4, mult)
    del mult[(0, 1)]
    with pytest.raises(MultiplicityError):
        build_multigraph(k4, mult)


def test_multigraph_rejects_loops():
    with pytest.raises(GraphError):
        Multigraph(2, ((1, 1),))


def test_multigraph_extended_keeps_ids():
    m = Multigraph(2, ((0, 1), (0, 1)))
    bigger = m.extended(1, [(1, 2)])
    assert bigger.vertex_count == 3
    assert bigger.ends[:2] == m.ends
    assert bigger.other_end(2, 2) == 1
    with pytest.raises(GraphError):
        bigger.other_end(2, 0)


def test_trail_validation():
    with pytest.raises(TrailError):
        Trail((0, 1), (), False)
    with pytest.raises(TrailError):
        Trail((0, 1, 0), (0, 0), True)
    with pytest.raises(TrailError):
        Trail((0, 1, 2), (0, 1), True)


def test_trail_rotate_and_reverse():
    m = Multigraph(3, ((0, 1), (1, 2), (0, 2)))
    trail = Trail((0, 1, 2, 0), (0, 1, 2), True)
    trail.check(m)
    rotated = trail.rotate(1)
    assert rotated.vertices == (1, 2, 0, 1)
    assert rotated.edges == (1, 2, 0)
    assert trail.reversed().vertices == (0, 2, 1, 0)
    assert trail.covers(m)
    with pytest.raises(TrailError):
        Trail((0, 1), (0,), False).rotate(1)


def test_trail_check_reports_wrong_edge():
    m = Multigraph(3, ((0, 1), (1, 2)))
    with pytest.raises(TrailError):
        Trail((0, 2), (0,), False).check(m)


def test_trail_from_vertices_uses_lowest_free_copy(petersen_tour):
    doubled, tour = petersen_tour
    assert tour.closed
    assert tour.length == 30
    assert tour.covers(doubled)
    tour.check(doubled)
    assert set(edge_multiset(tour, doubled).values()) == {2}
    with pytest.raises(TrailError):
        trail_from_vertices(doubled, [0, 1, 0, 1, 0], closed=True)


def test_normalize_edge():
    assert normalize_edge(3, 1) == (1, 3)
    assert normalize_edge(1, 3) == (1, 3)


def test_connectivity_predicates(petersen):
    assert is_connected(petersen)
    assert is_two_edge_connected(petersen)
    assert bridges(petersen) == []


def test_two_triangles_joined_by_an_edge_have_a_bridge():
    g = SimpleGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    assert is_connected(g)
    assert not is_two_edge_connected(g)
    assert bridges(g) == [(2, 3)]


def test_connectivity_of_empty_graph_is_undefined():
    with pytest.raises(GraphError):
        is_connected(SimpleGraph(0, ()))


def test_edge_cut_pair():
    c4 = graph_of(nx.cycle_graph(4))
    assert is_edge_cut_pair(c4, (0, 1), (3, 2))
    assert not is_edge_cut_pair(graph_of(nx.complete_graph(4)), (0, 1), (2, 3))
    with pytest.raises(GraphError):
        is_edge_cut_pair(c4, (0, 1), (1, 0))
    with pytest.raises(GraphError):
        is_edge_cut_pair(c4, (0, 2), (1, 2))


def _connected_without(graph, removed):
    kept = [e for e in graph.edges() if e not in removed]
    return is_connected(SimpleGraph.from_edges(graph.vertex_count, kept))


def _check_connectivity_by_edge_removal(order):
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() != order:
            continue
        graph = graph_of(g)
        edges = graph.edges()
        expected = is_connected(graph) and all(_connected_without(graph, {e}) for e in edges)
        assert is_two_edge_connected(graph) == expected, edges
        for i, first in enumerate(edges):
            for second in edges[i + 1:]:
                assert is_edge_cut_pair(graph, first, second) == (
                    not _connected_without(graph, {first, second})
                ), (edges, first, second)


@pytest.mark.parametrize("order", [1, 2, 3, 4, 5, 6])
def test_connectivity_matches_edge_removal(order):
    _check_connectivity_by_edge_removal(order)


@pytest.mark.slow
def test_connectivity_matches_edge_removal_on_seven_vertices():
    _check_connectivity_by_edge_removal(7)
