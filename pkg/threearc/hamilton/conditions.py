#!/usr/bin/env python3
# threearc - conditions.py
# Revision: 1.0.0

"""
Hypothesis checks for the Hamilton cycle and Hamilton path constructions

Cycle conditions on G:
  (a) minimum degree at least 2
  (b) no two degree-two vertices are adjacent
  (c) G minus its degree-two vertices is connected (and nonempty)

Path hypotheses on G: 2-edge-connected, minimum degree at least 3, and
an odd-length path between every two distinct vertices.
"""

import functools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import networkx as nx

from threearc.arcs.hat import hat_graph
from threearc.core.connectivity import bridges, is_connected
from threearc.core.errors import GraphError
from threearc.core.graph import Edge, SimpleGraph
from threearc.hamilton.oddpath import first_pair_without_odd_path


@dataclass(frozen=True)
class ConditionReport:
    """
    Outcome of the three cycle conditions, each with its witnesses

    Attributes:
        min_degree_ok: (a)
        no_adjacent_degree2: (b)
        core_connected: (c)
        low_degree: Vertices of degree 0 or 1
        adjacent_degree2: Edges joining two degree-two vertices
        core_components: Components of G - S2 when there are several
    """

    min_degree_ok: bool
    no_adjacent_degree2: bool
    core_connected: bool
    low_degree: Tuple[int, ...] = ()
    adjacent_degree2: Tuple[Edge, ...] = ()
    core_components: Tuple[Tuple[int, ...], ...] = ()

    @property
    def all_ok(self) -> bool:
        return self.min_degree_ok and self.no_adjacent_degree2 and self.core_connected

    def failed_clauses(self) -> List[str]:
        failed = []
        if not self.min_degree_ok:
            failed.append("a")
        if not self.no_adjacent_degree2:
            failed.append("b")
        if not self.core_connected:
            failed.append("c")
        return failed

    def render(self) -> str:
        """Text report printed by the check command"""

        def mark(ok: bool) -> str:
            return "true" if ok else "false"

        lines = [f"(a) min degree >= 2: {mark(self.min_degree_ok)}"]
        if self.low_degree:
            lines.append(f"    low-degree vertices: {' '.join(map(str, self.low_degree))}")
        lines.append(f"(b) no adjacent degree-2 vertices: {mark(self.no_adjacent_degree2)}")
        if self.adjacent_degree2:
            lines.append("    adjacent pairs: " + ", ".join(f"{u}-{v}" for u, v in self.adjacent_degree2))
        lines.append(f"(c) G - S2 connected: {mark(self.core_connected)}")
        for component in self.core_components:
            lines.append(f"    component: {' '.join(map(str, component))}")
        lines.append(f"X(G) hamiltonian: {mark(self.all_ok)}")
        return "\n".join(lines)


def check_conditions(graph: SimpleGraph) -> ConditionReport:
    """
    Decide the three cycle conditions independently.

    Isolated vertices count as an (a) failure. (c) is false when G has no
    vertex of degree other than two.

    Raises:
        GraphError: For the empty graph
    """
    if graph.vertex_count == 0:
        raise GraphError("conditions are undefined for the empty graph")

    low = tuple(v for v in range(graph.vertex_count) if graph.degree(v) < 2)
    s2 = set(graph.degree_class(2))
    adjacent = tuple((u, v) for u, v in graph.edges() if u in s2 and v in s2)

    core = graph.to_networkx()
    core.remove_nodes_from(s2)
    components: Tuple[Tuple[int, ...], ...] = ()
    if core.number_of_nodes() == 0:
        core_ok = False
    else:
        parts = sorted(tuple(sorted(c)) for c in nx.connected_components(core))
        core_ok = len(parts) == 1
        if not core_ok:
            components = tuple(parts)

    report = ConditionReport(not low, not adjacent, core_ok, low, adjacent, components)
    logging.debug(f"Cycle conditions: failed clauses {report.failed_clauses() or 'none'}")
    return report


def is_X_hamiltonian(graph: SimpleGraph) -> bool:
    """Whether the 3-arc graph X(G) has a Hamilton cycle"""
    return check_conditions(graph).all_ok


def hat_criterion(graph: SimpleGraph) -> bool:
    """Minimum degree at least 2 and the split graph connected"""
    return graph.min_degree >= 2 and is_connected(hat_graph(graph))


@dataclass(frozen=True)
class PathHypothesisReport:
    """
    The three path hypotheses with witnesses

    Attributes:
        two_edge_connected: Connected and bridgeless
        min_degree_ok: Minimum degree at least 3
        odd_paths_ok: Odd path between every two vertices
        bridges: Bridges of G, when connected
        low_degree: Vertices of degree below 3
        pair_without_odd_path: First vertex pair lacking an odd path
    """

    two_edge_connected: bool
    min_degree_ok: bool
    odd_paths_ok: bool
    bridges: Tuple[Edge, ...] = ()
    low_degree: Tuple[int, ...] = ()
    pair_without_odd_path: Optional[Tuple[int, int]] = None
    details: Dict[str, str] = field(default_factory=dict, compare=False, hash=False)

    @property
    def all_ok(self) -> bool:
        return self.two_edge_connected and self.min_degree_ok and self.odd_paths_ok

    def failed_clauses(self) -> List[str]:
        failed = []
        if not self.two_edge_connected:
            failed.append("2-edge-connected")
        if not self.min_degree_ok:
            failed.append("min degree >= 3")
        if not self.odd_paths_ok:
            failed.append("odd paths")
        return failed

    def render(self) -> str:
        lines = [
            f"2-edge-connected: {str(self.two_edge_connected).lower()}",
            f"min degree >= 3: {str(self.min_degree_ok).lower()}",
            f"odd path between all pairs: {str(self.odd_paths_ok).lower()}",
        ]
        if self.bridges:
            lines.append("bridges: " + ", ".join(f"{u}-{v}" for u, v in self.bridges))
        if self.low_degree:
            lines.append(f"low-degree vertices: {' '.join(map(str, self.low_degree))}")
        if self.pair_without_odd_path is not None:
            a, b = self.pair_without_odd_path
            lines.append(f"no odd path between {a} and {b}")
        for key, value in self.details.items():
            lines.append(f"{key}: {value}")
        return "\n".join(lines)


@functools.lru_cache(maxsize=64)
def check_path_hypotheses(graph: SimpleGraph) -> PathHypothesisReport:
    """Decide the Hamilton path hypotheses, cached per graph"""
    if graph.vertex_count == 0:
        raise GraphError("hypotheses are undefined for the empty graph")
    connected = is_connected(graph)
    cut_edges = tuple(bridges(graph)) if connected else ()
    low = tuple(v for v in range(graph.vertex_count) if graph.degree(v) < 3)
    details = {} if connected else {"connectivity": "graph is disconnected"}
    missing = first_pair_without_odd_path(graph)
    return PathHypothesisReport(
        two_edge_connected=connected and not cut_edges,
        min_degree_ok=not low,
        odd_paths_ok=missing is None,
        bridges=cut_edges,
        low_degree=low,
        pair_without_odd_path=missing,
        details=details,
    )
