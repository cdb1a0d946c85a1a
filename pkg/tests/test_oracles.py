import networkx as nx
import pytest

from threearc.arcs.construct import three_arc_graph
from threearc.core.errors import GraphError, OracleCapExceeded
from threearc.verify.oracles import (
    brute_force_hamilton_connected,
    brute_force_hamilton_path,
    brute_force_hamiltonian,
)

from conftest import graph_of


def test_petersen_is_not_hamiltonian(petersen):
    assert not brute_force_hamiltonian(petersen)


def test_small_graphs(k4, k33, c5):
    assert brute_force_hamiltonian(k4)
    assert brute_force_hamiltonian(k33)
    assert brute_force_hamiltonian(c5)
    assert not brute_force_hamiltonian(graph_of(nx.complete_graph(2)))
    assert not brute_force_hamiltonian(graph_of(nx.star_graph(3)))


def test_three_arc_graph_of_k4(k4):
    xg, _ = three_arc_graph(k4)
    assert brute_force_hamiltonian(xg)


def test_cap(petersen):
    with pytest.raises(OracleCapExceeded):
        brute_force_hamiltonian(petersen, cap=9)
    with pytest.raises(OracleCapExceeded):
        brute_force_hamilton_connected(petersen, cap=9)


def test_paths(k33, c5):
    # 0, 1, 2 form one side of K3,3
    assert not brute_force_hamilton_path(k33, 0, 1)
    assert brute_force_hamilton_path(k33, 0, 3)
    assert brute_force_hamilton_path(c5, 0, 1)
    assert not brute_force_hamilton_path(c5, 0, 2)


def test_path_arguments(c5):
    with pytest.raises(GraphError):
        brute_force_hamilton_path(c5, 0, 5)


def test_hamilton_connected(k4, k33, c5, petersen):
    assert brute_force_hamilton_connected(k4)
    assert not brute_force_hamilton_connected(k33)
    assert not brute_force_hamilton_connected(c5)
    assert not brute_force_hamilton_connected(petersen)
