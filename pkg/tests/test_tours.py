import random

import pytest

from threearc.core.errors import GraphError, TrailError, TrailExtensionError
from threearc.core.graph import Multigraph, SimpleGraph, Trail, build_multigraph, edge_multiset, uniform_multiplicity
from threearc.euler.operations import bow_tie, concatenate, split_at_twins
from threearc.euler.tours import closed_subtour, euler_tour, euler_tour_s2_compatible, euler_tour_through
from threearc.euler.visits import Visit, find_visit, visit_at, visits_of_trail


def doubled(graph):
    return build_multigraph(graph, uniform_multiplicity(graph, 2))


def test_euler_tour_covers_doubled_graph(petersen):
    m = doubled(petersen)
    tour = euler_tour(m, 0)
    tour.check(m)
    assert tour.closed
    assert tour.covers(m)
    assert tour.vertices[0] == 0


def test_euler_tour_is_deterministic(k5):
    m = doubled(k5)
    assert euler_tour(m, 0) == euler_tour(m, 0)


def test_shuffled_tours_stay_eulerian(k5):
    m = doubled(k5)
    rng = random.Random(3)
    for _ in range(20):
        tour = euler_tour(m, 2, rng=rng)
        tour.check(m)
        assert tour.covers(m)


def test_euler_tour_preconditions():
    path = build_multigraph(SimpleGraph.from_edges(3, [(0, 1), (1, 2)]), {(0, 1): 1, (1, 2): 1})
    with pytest.raises(GraphError):
        euler_tour(path, 0)
    two_triangles = Multigraph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)))
    with pytest.raises(GraphError):
        euler_tour(two_triangles, 0)
    with pytest.raises(GraphError):
        euler_tour(Multigraph(3, ((0, 1), (0, 1))), 2)


def test_s2_compatible_tour_bounces_at_degree_two(theta):
    m = doubled(theta)
    tour = euler_tour_s2_compatible(m, theta.degree_class(2))
    tour.check(m)
    assert tour.covers(m)
    for visit in visits_of_trail(tour, 4):
        assert visit.is_loop()


def test_s2_compatible_rejects_adjacent_degree_two():
    adjacent_pair = SimpleGraph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 0)])
    with pytest.raises(GraphError):
        euler_tour_s2_compatible(doubled(adjacent_pair), adjacent_pair.degree_class(2))


def test_tour_through_anchor(k4):
    m = doubled(k4)
    anchor = Visit(1, 0, 2, m.copies(0, 1)[0], m.copies(0, 2)[0])
    tour = euler_tour_through(m, anchor)
    tour.check(m)
    assert tour.covers(m)
    assert tour.vertices[:3] == (1, 0, 2)
    assert find_visit(tour, anchor) is not None


def test_tour_through_two_edge_cut_fails():
    # two triangles joined by a doubled edge 2-3; the anchor uses both copies
    g = SimpleGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
    mult = uniform_multiplicity(g, 2)
    m = build_multigraph(g, mult)
    e1, e2 = m.copies(2, 3)
    anchor = Visit(2, 3, 2, e1, e2)
    with pytest.raises(TrailExtensionError):
        euler_tour_through(m, anchor)


def test_closed_subtour_stays_in_component():
    m = Multigraph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)))
    sub = closed_subtour(m, 3, set(range(6)))
    assert set(sub.edges) == {3, 4, 5}
    assert sub.vertices[0] == sub.vertices[-1] == 3


def test_bow_tie_swaps_visit_ends():
    # the bow-tie graph: triangles 0-1-2 and 0-3-4 sharing vertex 0
    m = Multigraph(5, ((0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)))
    tour = euler_tour(m, 1)
    p, q = visits_of_trail(tour, 0)
    swapped = bow_tie(tour, p, q)
    swapped.check(m)
    assert swapped.covers(m)
    ends = sorted(v.ends for v in visits_of_trail(swapped, 0))
    assert ends != sorted(v.ends for v in (p, q))
    assert edge_multiset(swapped, m) == edge_multiset(tour, m)


def test_split_and_concatenate_restore_coverage():
    # doubled edges 0-1 and 0-2; both visits to 0 join 1 and 2
    m = Multigraph(3, ((0, 1), (0, 1), (0, 2), (0, 2)))
    tour = Trail((1, 0, 2, 0, 1), (0, 2, 3, 1), True)
    tour.check(m)
    p, q = visits_of_trail(tour, 0)
    assert p.is_twin_of(q)
    rest, piece = split_at_twins(tour, p, q)
    assert piece.closed and rest.closed
    assert sorted(rest.edges + piece.edges) == [0, 1, 2, 3]
    assert all(v.is_loop() for v in visits_of_trail(rest, 0) + visits_of_trail(piece, 0))

    host_visit = visits_of_trail(rest, 0)[0]
    guest_visit = visits_of_trail(piece, 0)[0]
    merged = concatenate(rest, piece, host_visit, guest_visit)
    merged.check(m)
    assert merged.covers(m)
    assert merged.closed


def test_concatenate_rejects_open_guest():
    host = Trail((1, 0, 1), (0, 1), True)
    guest = Trail((2, 0, 2), (2, 3), False)
    with pytest.raises(TrailError):
        concatenate(host, guest, visit_at(host, 1), Visit(2, 0, 2, 2, 3))
