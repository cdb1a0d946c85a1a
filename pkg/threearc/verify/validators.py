#!/usr/bin/env python3
# threearc - validators.py
# Revision: 1.0.0

"""
Independent certificate validators for threearc

Adjacency in X(G) is recomputed here from G itself: arcs uv and xy are
adjacent when (v, u, x) and (u, x, y) are both 2-paths of G. Nothing in
this module consults the constructed 3-arc graph, so a defect in the
construction cannot hide a defect in a certificate.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from threearc.core.errors import GraphError
from threearc.core.graph import Arc, SimpleGraph

MISSING_ARC = "missing-arc"
REPEATED_ARC = "repeated-arc"
NON_ADJACENT_PAIR = "non-adjacent-pair"
WRONG_ENDPOINT = "wrong-endpoint"
WRONG_LENGTH = "wrong-length"


@dataclass(frozen=True)
class ValidationError:
    """
    The first defect found in a certificate

    Attributes:
        kind: One of the module-level kind constants
        position: Index into the sequence where the defect shows
        detail: The offending arcs
    """

    kind: str
    position: int
    detail: Tuple[Arc, ...] = ()

    def __str__(self) -> str:
        arcs = " ".join(str(Arc(*a)) for a in self.detail)
        return f"{self.kind} at position {self.position}" + (f": {arcs}" if arcs else "")


def is_two_path(graph: SimpleGraph, a: int, b: int, c: int) -> bool:
    """(a, b, c) with a != c and both ab and bc edges"""
    return a != c and graph.has_edge(a, b) and graph.has_edge(b, c)


def three_arc_adjacent(graph: SimpleGraph, first: Arc, second: Arc) -> bool:
    """Whether arcs uv and xy are adjacent in X(G), i.e. (v, u, x, y) is a 3-arc"""
    u, v = first
    x, y = second
    return is_two_path(graph, v, u, x) and is_two_path(graph, u, x, y)


def _check_arcs(graph: SimpleGraph, sequence: Sequence[Arc]) -> Optional[ValidationError]:
    expected = 2 * graph.edge_count
    if expected == 0:
        raise GraphError("an edgeless graph has no 3-arc graph to validate against")
    if len(sequence) != expected:
        return ValidationError(WRONG_LENGTH, len(sequence))

    first_seen = {}
    for i, arc in enumerate(sequence):
        arc = Arc(*arc)
        if arc in first_seen:
            return ValidationError(REPEATED_ARC, i, (sequence[first_seen[arc]], arc))
        first_seen[arc] = i

    for i, arc in enumerate(sequence):
        if not graph.has_edge(arc[0], arc[1]):
            return ValidationError(MISSING_ARC, i, (Arc(*arc),))
    return None


def validate_cycle(graph: SimpleGraph, sequence: Sequence[Arc]) -> Optional[ValidationError]:
    """
    Check that a cyclic arc sequence is a Hamilton cycle of X(G).

    Checks run in order: length, repeated arcs, arcs foreign to G (so
    some arc of G is missing), then adjacency of every consecutive pair
    including the wrap-around.

    Args:
        graph: The base graph G
        sequence: Arcs of G, without a closing repeat

    Returns:
        None when valid, otherwise the first defect
    """
    error = _check_arcs(graph, sequence)
    if error is not None:
        return error
    n = len(sequence)
    for i in range(n):
        a, b = sequence[i], sequence[(i + 1) % n]
        if not three_arc_adjacent(graph, a, b):
            return ValidationError(NON_ADJACENT_PAIR, i, (Arc(*a), Arc(*b)))
    return None


def validate_path(
    graph: SimpleGraph, sequence: Sequence[Arc], endpoints: Tuple[Arc, Arc]
) -> Optional[ValidationError]:
    """
    Check that an arc sequence is a Hamilton path of X(G) between two given arcs.

    Same checks as validate_cycle without the wrap-around, plus the two
    endpoints before adjacency.
    """
    error = _check_arcs(graph, sequence)
    if error is not None:
        return error
    start, end = Arc(*endpoints[0]), Arc(*endpoints[1])
    if Arc(*sequence[0]) != start:
        return ValidationError(WRONG_ENDPOINT, 0, (Arc(*sequence[0]), start))
    if Arc(*sequence[-1]) != end:
        return ValidationError(WRONG_ENDPOINT, len(sequence) - 1, (Arc(*sequence[-1]), end))
    for i in range(len(sequence) - 1):
        a, b = sequence[i], sequence[i + 1]
        if not three_arc_adjacent(graph, a, b):
            return ValidationError(NON_ADJACENT_PAIR, i, (Arc(*a), Arc(*b)))
    return None
