#!/usr/bin/env python3
# threearc - cycle.py
# Revision: 1.0.0

"""
Hamilton cycles of 3-arc graphs for threearc

Pipeline: double every edge of G, take an Eulerian tour that bounces
straight back at each degree-two vertex, repair twin visits, pick a
perfect matching of H(v) at every vertex, and map each visit (u, v, w)
of the tour to its matched arc. Consecutive visits give 3-arc-adjacent
arcs, so the mapped tour is a Hamilton cycle of X(G).
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple

from threearc.core.errors import ConstructionError, HypothesisError
from threearc.core.graph import Arc, SimpleGraph, Trail, build_multigraph, uniform_multiplicity
from threearc.euler.matching import Matching
from threearc.euler.repair import local_matchings, repair_twin_visits
from threearc.euler.tours import euler_tour_s2_compatible
from threearc.euler.visits import visit_at, visit_positions
from threearc.hamilton.conditions import check_conditions
from threearc.verify.validators import validate_cycle


@dataclass(frozen=True)
class CertifiedCycle:
    """A Hamilton cycle of X(G) as a cyclic arc sequence of G"""

    arcs: Tuple[Arc, ...]
    verified: bool

    def __len__(self) -> int:
        return len(self.arcs)

    def lines(self) -> List[str]:
        """One "tail>head" line per arc, closed by a repeat of the first"""
        return [str(arc) for arc in self.arcs] + [str(self.arcs[0])]


def phi_sequence(trail: Trail, matchings: Mapping[int, Matching]) -> List[Arc]:
    """
    Map every visit of a trail to its matched arc, in trail order.

    For a closed trail the wrap-around visit comes last, so the result
    starts with the visit at position 1.

    Raises:
        ConstructionError: If a visited vertex has no matching
    """
    positions = list(visit_positions(trail))
    if trail.closed:
        positions = positions[1:] + positions[:1]
    arcs: List[Arc] = []
    for i in positions:
        visit = visit_at(trail, i)
        matching = matchings.get(visit.mid_vertex)
        if matching is None:
            raise ConstructionError(f"no matching at vertex {visit.mid_vertex}", trail.format())
        arcs.append(matching.arc_for(visit))
    return arcs


def canonical_rotation(arcs: List[Arc]) -> List[Arc]:
    """Rotate a cyclic sequence to start at its least arc"""
    k = arcs.index(min(arcs))
    return arcs[k:] + arcs[:k]


def hamilton_cycle_of_X(graph: SimpleGraph) -> CertifiedCycle:
    """
    Construct a verified Hamilton cycle of the 3-arc graph X(G).

    Args:
        graph: A graph meeting the three cycle conditions

    Returns:
        The cycle, rotated to start at the least arc

    Raises:
        HypothesisError: If a condition fails; carries the ConditionReport
        ConstructionError: If any internal step or the final validation
            fails
    """
    report = check_conditions(graph)
    if not report.all_ok:
        raise HypothesisError(
            f"cycle conditions fail: {', '.join(report.failed_clauses())}", report
        )

    doubled = build_multigraph(graph, uniform_multiplicity(graph, 2))
    tour = euler_tour_s2_compatible(doubled, graph.degree_class(2))
    logging.debug(f"Compatible tour of length {tour.length}")
    tour = repair_twin_visits(tour, doubled)

    matchings: Dict[int, Matching] = {}
    for v, matching in local_matchings(tour, doubled).items():
        if matching is None:
            raise ConstructionError(f"vertex {v} still lacks a perfect matching", tour.format())
        matchings[v] = matching

    arcs = canonical_rotation(phi_sequence(tour, matchings))
    error = validate_cycle(graph, arcs)
    if error is not None:
        raise ConstructionError(
            f"constructed cycle failed validation: {error}",
            f"tour: {tour.format()}\narcs: {' '.join(map(str, arcs))}",
        )
    logging.info(f"Certified Hamilton cycle of X(G) with {len(arcs)} arcs")
    return CertifiedCycle(tuple(arcs), True)
