"""
Bow-tie, split and concatenation rewrites of trails for threearc

All three keep the edge multiset. Visits at every vertex other than the
operated one survive, possibly reversed.
"""

from typing import Tuple

from threearc.core.errors import TrailError
from threearc.core.graph import Trail
from threearc.euler.visits import Visit, locate


def _off_wrap(trail: Trail, x: int) -> Trail:
    """Rotate a closed trail so that no visit to x sits on the wrap position"""
    if trail.closed and trail.vertices[0] == x:
        return trail.rotate(1)
    return trail


def _ordered_positions(trail: Trail, p: Visit, q: Visit) -> Tuple[int, int]:
    if p.mid_vertex != q.mid_vertex:
        raise TrailError(f"visits {p} and {q} have different mid-vertices")
    if p.key == q.key:
        raise TrailError(f"the same visit {p} was passed twice")
    i, j = locate(trail, p), locate(trail, q)
    return (i, j) if i < j else (j, i)


def bow_tie(trail: Trail, p: Visit, q: Visit) -> Trail:
    """
    Swap two visits at a common mid-vertex by reversing the segment between them.

    With p = (x1, x, x2) before q = (x3, x, x4) along the trail, the
    result induces (x1, x, x3) and (x2, x, x4) in their place.

    Args:
        trail: Trail of length at least 4 inducing p and q
        p: A visit to x
        q: Another visit to x

    Returns:
        The rewritten trail

    Raises:
        TrailError: If a visit is not induced, or p and q coincide
    """
    if trail.length < 4:
        raise TrailError("bow-tie needs a trail of length at least 4")
    trail = _off_wrap(trail, p.mid_vertex)
    i, j = _ordered_positions(trail, p, q)
    vs, es = trail.vertices, trail.edges
    vertices = vs[:i + 1] + vs[i + 1:j][::-1] + vs[j:]
    edges = es[:i] + es[i:j][::-1] + es[j:]
    return Trail(vertices, edges, trail.closed)


def split_at_twins(trail: Trail, p: Visit, q: Visit) -> Tuple[Trail, Trail]:
    """
    Cut a trail at two oppositely oriented twin visits.

    With p = (a, x, b) at position i and q = (b, x, a) at j > i, the
    segment x .. x between them becomes a closed trail inducing the loop
    (b, x, b), and the remainder keeps its shape with the loop (a, x, a).

    Returns:
        (remainder, closed piece)
    """
    trail = _off_wrap(trail, p.mid_vertex)
    i, j = _ordered_positions(trail, p, q)
    vs, es = trail.vertices, trail.edges
    if vs[i - 1] != vs[j + 1] or vs[i + 1] != vs[j - 1]:
        raise TrailError(f"visits {p} and {q} are not oppositely oriented twins")
    piece = Trail(vs[i:j + 1], es[i:j], True)
    rest = Trail(vs[:i + 1] + vs[j + 1:], es[:i] + es[j:], trail.closed)
    return rest, piece


def concatenate(first: Trail, second: Trail, p: Visit, q: Visit) -> Trail:
    """
    Merge a closed trail into another trail at a shared vertex.

    With p = (x1, x, x2) induced by the first trail and q = (x3, x, x4)
    by the second, the result covers both edge sets and induces
    (x1, x, x3) and (x4, x, x2) in place of p and q.

    Args:
        first: Host trail; may be open if p is an interior visit
        second: Closed guest trail
        p: Visit of the host
        q: Visit of the guest at the same mid-vertex

    Returns:
        The merged trail, closed exactly when the host is

    Raises:
        TrailError: Shared edges, an open guest, or visits at different
            mid-vertices
    """
    if p.mid_vertex != q.mid_vertex:
        raise TrailError(f"visits {p} and {q} have different mid-vertices")
    if not second.closed:
        raise TrailError("the guest trail must be closed")
    if set(first.edges) & set(second.edges):
        raise TrailError("trails to concatenate share edges")
    x = p.mid_vertex

    host = _off_wrap(first, x)
    i = locate(host, p)

    k = locate(second, q)
    guest = second.rotate(k).reversed()
    # guest now reads x, x3, ..., x4, x

    vertices = host.vertices[:i] + guest.vertices + host.vertices[i + 1:]
    edges = host.edges[:i] + guest.edges + host.edges[i:]
    return Trail(vertices, edges, host.closed)
