import random

import networkx as nx
import pytest

from threearc.arcs.construct import (
    ArcIndex,
    expected_size,
    iterate_three_arc,
    three_arc_graph,
    three_arc_levels,
    x_connected,
)
from threearc.arcs.hat import hat_graph
from threearc.core.errors import GraphError, SizeCapExceeded
from threearc.core.graph import Arc, SimpleGraph
from threearc.verify.validators import three_arc_adjacent

from conftest import graph_of


def test_arc_index_is_sorted_bijection(k4):
    index = ArcIndex.of(k4)
    assert len(index) == 12
    assert index.arc_at(0) == Arc(0, 1)
    assert index.index_of(Arc(3, 2)) == 11
    with pytest.raises(GraphError):
        index.index_of(Arc(0, 0))
    assert index.serialize().splitlines()[1] == "1 0 2"


def test_petersen_sizes(petersen):
    xg, index = three_arc_graph(petersen)
    assert xg.vertex_count == 30
    assert xg.edge_count == 60
    assert all(xg.degree(v) == 4 for v in range(30))
    assert expected_size(petersen) == (30, 60)


def test_adjacency_matches_first_principles(k4):
    xg, index = three_arc_graph(k4)
    for i, first in enumerate(index.arcs):
        for j, second in enumerate(index.arcs):
            assert xg.has_edge(i, j) == three_arc_adjacent(k4, first, second)


def test_single_edge_gives_two_isolated_vertices():
    xg, _ = three_arc_graph(SimpleGraph.from_edges(2, [(0, 1)]))
    assert xg.vertex_count == 2
    assert xg.edge_count == 0


def test_edgeless_graph_rejected():
    with pytest.raises(GraphError):
        three_arc_graph(SimpleGraph.from_edges(3, []))


def test_size_formulas_on_random_graphs():
    rng = random.Random(7)
    checked = 0
    while checked < 200:
        n = rng.randint(2, 30)
        g = nx.gnp_random_graph(n, rng.uniform(0.1, 0.5), seed=rng.randrange(10 ** 6))
        if not nx.is_connected(g) or g.number_of_edges() == 0:
            continue
        graph = graph_of(g)
        xg, _ = three_arc_graph(graph)
        assert (xg.vertex_count, xg.edge_count) == expected_size(graph)
        checked += 1


def test_iterated_sizes_of_k4(k4):
    sizes = [(level, g.vertex_count) for level, g, _ in three_arc_levels(k4, 3)]
    assert sizes == [(1, 12), (2, 48), (3, 432)]
    assert iterate_three_arc(k4, 2).vertex_count == 48


def test_size_cap_checked_before_building(k4):
    levels = three_arc_levels(k4, 3, max_vertices=100)
    assert next(levels)[0] == 1
    assert next(levels)[0] == 2
    with pytest.raises(SizeCapExceeded):
        next(levels)


def test_level_count_must_be_positive(k4):
    with pytest.raises(GraphError):
        list(three_arc_levels(k4, 0))


def test_x_connected(petersen, c5):
    assert x_connected(petersen)
    assert not x_connected(c5)


def test_hat_graph_splits_degree_two_vertices(theta):
    split = hat_graph(theta)
    assert split.vertex_count == 6
    assert split.edge_count == theta.edge_count
    assert split.neighbors(4) == (1,)
    assert split.neighbors(5) == (2,)


def test_hat_graph_without_degree_two_is_identity(petersen):
    assert hat_graph(petersen) is petersen


def test_hat_of_cycle_falls_apart(c5):
    split = hat_graph(c5)
    assert split.vertex_count == 10
    assert not nx.is_connected(split.to_networkx())
