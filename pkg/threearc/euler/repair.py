#!/usr/bin/env python3
# threearc - repair.py
# Revision: 1.0.0

"""
Twin-visit repair for threearc

Z(C) is the set of vertices whose induced visit/arc graph has no
perfect matching. At the multiplicities used here that only happens at
a vertex with six edge ends carrying twin visits, and one local rewrite
at that vertex removes it from Z without touching the visits anywhere
else.
"""

import logging
from typing import AbstractSet, Dict, List, Optional

from threearc.core.errors import RepairError, UnhandledCaseError
from threearc.core.graph import Arc, Multigraph, Trail
from threearc.euler.matching import Matching, VisitArcGraph, build_H, perfect_matching
from threearc.euler.operations import bow_tie, concatenate, split_at_twins
from threearc.euler.visits import (
    Visit,
    VisitDecomposition,
    all_visits,
    find_visit,
    twin_pairs,
    visits_of_trail,
)


def arcs_at(multigraph: Multigraph, x: int) -> List[Arc]:
    """A(x) of the underlying simple graph of a multigraph"""
    return [Arc(x, w) for w in multigraph.neighbors(x)]


def local_H(trail: Trail, multigraph: Multigraph, x: int) -> VisitArcGraph:
    """H_C(x) for the visits a trail induces at x"""
    decomposition = VisitDecomposition(x, tuple(visits_of_trail(trail, x)))
    return build_H(decomposition, arcs_at(multigraph, x))


def local_matchings(
    trail: Trail, multigraph: Multigraph, exempt: AbstractSet[int] = frozenset()
) -> Dict[int, Optional[Matching]]:
    """Perfect matching (or None) of H_C(x) at every vertex with defined visits"""
    result = {}
    for x, visits in sorted(all_visits(trail).items()):
        if x in exempt:
            continue
        graph = build_H(VisitDecomposition(x, tuple(visits)), arcs_at(multigraph, x))
        result[x] = perfect_matching(graph)
    return result


def find_Z(trail: Trail, multigraph: Multigraph, exempt: AbstractSet[int] = frozenset()) -> List[int]:
    """Vertices outside exempt whose H_C has no perfect matching, ascending"""
    return [x for x, m in local_matchings(trail, multigraph, exempt).items() if m is None]


def _dump(trail: Trail, multigraph: Multigraph, x: int) -> str:
    visits = ", ".join(str(v) for v in visits_of_trail(trail, x))
    mult = {w: multigraph.multiplicity(x, w) for w in multigraph.neighbors(x)}
    return f"vertex {x}: visits {visits}; multiplicities {mult}; trail {trail.format()}"


def _touches(visit: Visit, protected: Optional[Visit]) -> bool:
    return protected is not None and visit.key == protected.key


def _repair_doubled(trail: Trail, multigraph: Multigraph, w: int, protected: Optional[Visit]) -> Trail:
    """All three neighbours doubled: bow-tie a twin with the third visit"""
    visits = visits_of_trail(trail, w)
    first, second = twin_pairs(visits)[0]
    third = next(v for v in visits if v.key not in (first.key, second.key))

    candidates = [(first, third), (second, third)]
    if first.entry_vertex == second.entry_vertex:
        candidates.append((first, second))
    for p, q in candidates:
        if _touches(p, protected) or _touches(q, protected):
            continue
        repaired = bow_tie(trail, p, q)
        if perfect_matching(local_H(repaired, multigraph, w)) is not None:
            return repaired
    raise RepairError(f"no bow-tie repairs vertex {w}", _dump(trail, multigraph, w))


def _repair_mixed(trail: Trail, multigraph: Multigraph, w: int, protected: Optional[Visit]) -> Trail:
    """
    One single, one doubled and one tripled neighbour.

    The twins always join the doubled and the tripled neighbour. Twins
    running the same way are bow-tied into two loops. Twins running
    opposite ways cut the trail into a remainder and a closed piece,
    each carrying a loop at w; the piece without the third visit is
    then merged through its loop with the third visit.
    """
    visits = visits_of_trail(trail, w)
    first, second = twin_pairs(visits)[0]
    third = next(v for v in visits if v.key not in (first.key, second.key))
    if any(_touches(v, protected) for v in (first, second, third)):
        raise UnhandledCaseError(f"protected visit {protected} sits at the vertex being repaired")

    if first.entry_vertex == second.entry_vertex:
        logging.debug(f"Vertex {w}: twins {first} {second} run the same way, bow-tie")
        return bow_tie(trail, first, second)

    rest, piece = split_at_twins(trail, first, second)
    third_in_piece = find_visit(piece, third) is not None
    rest_loop = next(v for v in visits_of_trail(rest, w) if v.key != third.key)
    piece_loop = next(v for v in visits_of_trail(piece, w) if v.key != third.key)
    logging.debug(
        f"Vertex {w}: twins {first} {second} run opposite ways, split; third visit in "
        f"{'closed piece' if third_in_piece else 'remainder'}"
    )
    if third_in_piece:
        return concatenate(rest, piece, rest_loop, find_visit(piece, third))
    return concatenate(rest, piece, find_visit(rest, third), piece_loop)


def repair_vertex(trail: Trail, multigraph: Multigraph, w: int, protected: Optional[Visit] = None) -> Trail:
    """
    Rewrite a trail so that H(w) gains a perfect matching.

    Raises:
        UnhandledCaseError: If w carries a multiplicity pattern or visit
            set outside the two patterns the repair knows
        RepairError: If the prescribed rewrite does not fix w
    """
    visits = visits_of_trail(trail, w)
    pattern = sorted(multigraph.multiplicity(w, u) for u in multigraph.neighbors(w))
    if len(visits) != 3 or not twin_pairs(visits):
        raise UnhandledCaseError(
            f"vertex {w} lacks a matching without twin visits", _dump(trail, multigraph, w)
        )

    if pattern == [2, 2, 2]:
        repaired = _repair_doubled(trail, multigraph, w, protected)
    elif pattern == [1, 2, 3]:
        repaired = _repair_mixed(trail, multigraph, w, protected)
    else:
        raise UnhandledCaseError(
            f"multiplicity pattern {pattern} at vertex {w}", _dump(trail, multigraph, w)
        )

    if perfect_matching(local_H(repaired, multigraph, w)) is None:
        raise RepairError(f"rewrite left vertex {w} without a matching", _dump(repaired, multigraph, w))
    return repaired


def repair_twin_visits(
    trail: Trail,
    multigraph: Multigraph,
    protected: Optional[Visit] = None,
    exempt: AbstractSet[int] = frozenset(),
) -> Trail:
    """
    Repair an Eulerian trail until Z is empty outside the exempt vertices.

    Vertices of Z are fixed in ascending order. Each round must shrink Z
    strictly, and there are at most |V| rounds.

    Args:
        trail: Eulerian tour or trail of the multigraph
        multigraph: The multigraph it covers
        protected: A visit that must stay induced
        exempt: Vertices left alone, e.g. the special vertex of a path
            construction

    Returns:
        The repaired trail

    Raises:
        RepairError: If Z fails to shrink, the round limit is hit, or the
            protected visit is lost
        UnhandledCaseError: If a vertex of Z has an unknown pattern
    """
    if protected is not None and find_visit(trail, protected) is None:
        raise RepairError(f"protected visit {protected} is not induced by the trail")

    z = find_Z(trail, multigraph, exempt)
    rounds = 0
    while z:
        if rounds >= multigraph.vertex_count:
            raise RepairError(f"repair did not finish in {rounds} rounds", trail.format())
        w = z[0]
        trail = repair_vertex(trail, multigraph, w, protected)
        new_z = find_Z(trail, multigraph, exempt)
        if not set(new_z) < set(z):
            raise RepairError(f"Z did not shrink: {z} -> {new_z}", trail.format())
        logging.debug(f"Repaired vertex {w}; {len(new_z)} left")
        z = new_z
        rounds += 1

    if protected is not None and find_visit(trail, protected) is None:
        raise RepairError(f"repair destroyed the protected visit {protected}", trail.format())
    if rounds:
        logging.info(f"Twin-visit repair finished after {rounds} rounds")
    return trail
