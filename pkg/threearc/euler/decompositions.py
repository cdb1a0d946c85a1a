"""
Exhaustive visit-decompositions of a single vertex for threearc

Used to check the matching criterion (no perfect matching exactly when
d*(x) = 6 and the decomposition has twin visits) over every
decomposition of the multiplicity patterns the constructions produce.
"""

import logging
from typing import Iterator, List, Sequence

from threearc.core.graph import Arc, Multigraph
from threearc.euler.matching import build_H, perfect_matching
from threearc.euler.visits import Visit, VisitDecomposition


def star_multigraph(multiplicities: Sequence[int]) -> Multigraph:
    """Vertex 0 joined to vertex i+1 by multiplicities[i] parallel edges"""
    ends = []
    for i, k in enumerate(multiplicities):
        ends.extend([(0, i + 1)] * k)
    return Multigraph(len(multiplicities) + 1, tuple(ends))


def _pairings(items: List[int]) -> Iterator[List[tuple]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for tail in _pairings(remaining):
            yield [(first, partner)] + tail


def enumerate_visit_decompositions(multigraph: Multigraph, x: int) -> Iterator[VisitDecomposition]:
    """
    Every partition of the edges at x into visits.

    Parallel copies are labelled, so decompositions that differ only in
    which copy is used are all produced.
    """
    incident = list(multigraph.incidence[x])
    if len(incident) % 2:
        return
    for pairing in _pairings(incident):
        visits = tuple(
            Visit(multigraph.other_end(e1, x), x, multigraph.other_end(e2, x), e1, e2)
            for e1, e2 in pairing
        )
        yield VisitDecomposition(x, visits)


def lemma_patterns(d_star: int) -> List[List[int]]:
    """
    Multiplicity patterns with total degree d_star that the matching
    criterion covers: all doubled, and one single plus one tripled with
    the rest doubled.
    """
    if d_star < 6 or d_star % 2:
        return []
    doubled = [2] * (d_star // 2)
    mixed = [1, 3] + [2] * ((d_star - 4) // 2)
    return [doubled, mixed]


def criterion_holds(decomposition: VisitDecomposition, arcs: Sequence[Arc], d_star: int) -> bool:
    """No perfect matching exactly when d* = 6 and there are twin visits"""
    missing = perfect_matching(build_H(decomposition, arcs)) is None
    return missing == (d_star == 6 and decomposition.has_twins())


def lemma_counterexamples(d_star: int) -> List[VisitDecomposition]:
    """Decompositions violating the matching criterion; empty when it holds"""
    failures: List[VisitDecomposition] = []
    checked = 0
    for pattern in lemma_patterns(d_star):
        star = star_multigraph(pattern)
        arcs = [Arc(0, w) for w in star.neighbors(0)]
        for decomposition in enumerate_visit_decompositions(star, 0):
            checked += 1
            if not criterion_holds(decomposition, arcs, d_star):
                failures.append(decomposition)
    logging.debug(f"Checked {checked} decompositions at d*={d_star}, {len(failures)} failures")
    return failures

