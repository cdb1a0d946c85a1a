#!/usr/bin/env python3
# threearc - graph.py
# Revision: 1.0.0

"""
Simple graphs, edge-identified multigraphs, arcs and trails for threearc

Vertices are dense 0-based integers everywhere. External labels (the
a/b names of the Petersen graph and so on) only ever live in fixtures.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, NamedTuple, Sequence, Tuple

import networkx as nx

from threearc.core.errors import GraphError, MultiplicityError, TrailError

Edge = Tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    """Return the edge {u, v} as an ordered pair (min, max)"""
    return (u, v) if u < v else (v, u)


class Arc(NamedTuple):
    """An oriented edge; sorts by (tail, head)"""

    tail: int
    head: int

    def reversed(self) -> "Arc":
        return Arc(self.head, self.tail)

    def __str__(self) -> str:
        return f"{self.tail}>{self.head}"


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected loopless graph without parallel edges

    Attributes:
        vertex_count: Number of vertices, labelled 0..vertex_count-1
        adjacency: Per-vertex sorted tuple of neighbours
    """

    vertex_count: int
    adjacency: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphError(f"negative vertex count {self.vertex_count}")
        if len(self.adjacency) != self.vertex_count:
            raise GraphError("adjacency table does not match vertex count")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"neighbours of {v} are not sorted and distinct")
            for w in nbrs:
                if w == v:
                    raise GraphError(f"loop at vertex {v}")
                if not 0 <= w < self.vertex_count:
                    raise GraphError(f"neighbour {w} of {v} out of range")
                if v not in self.adjacency[w]:
                    raise GraphError(f"adjacency not symmetric between {v} and {w}")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Edge]) -> "SimpleGraph":
        """Build a graph from an edge list, rejecting loops and duplicates"""
        nbrs: List[set] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge {u} {v} out of range for {vertex_count} vertices")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge {u} {v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(vertex_count, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "SimpleGraph":
        """Relabel a networkx graph to 0..n-1 in sorted node order"""
        nodes = sorted(graph.nodes())
        label = {node: i for i, node in enumerate(nodes)}
        edges = [(label[a], label[b]) for a, b in graph.edges() if a != b]
        return cls.from_edges(len(nodes), edges)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges())
        return graph

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.vertex_count and v in self.adjacency[u]

    def edges(self) -> List[Edge]:
        """All edges as (u, v) with u < v, sorted lexicographically"""
        return [(u, v) for u in range(self.vertex_count) for v in self.adjacency[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    @property
    def min_degree(self) -> int:
        if self.vertex_count == 0:
            raise GraphError("minimum degree of the empty graph")
        return min(len(nbrs) for nbrs in self.adjacency)

    def degree_class(self, i: int) -> List[int]:
        """Vertices of degree exactly i"""
        return [v for v in range(self.vertex_count) if len(self.adjacency[v]) == i]

    def arc(self, tail: int, head: int) -> Arc:
        """Return the arc tail>head, checking that it is an arc of the graph"""
        if not self.has_edge(tail, head):
            raise GraphError(f"{tail}>{head} is not an arc of the graph")
        return Arc(tail, head)

    def arcs_from(self, v: int) -> List[Arc]:
        """A(v): the arcs with tail v, ordered by head"""
        return [Arc(v, w) for w in self.adjacency[v]]

    def arcs(self) -> List[Arc]:
        """A(G) sorted by (tail, head)"""
        return [Arc(u, w) for u in range(self.vertex_count) for w in self.adjacency[u]]


@dataclass(frozen=True)
class Multigraph:
    """Loopless multigraph with dense edge ids

    Attributes:
        vertex_count: Number of vertices
        ends: ends[e] is the endpoint pair of edge e
        incidence: Per-vertex tuple of incident edge ids, ascending
    """

    vertex_count: int
    ends: Tuple[Edge, ...]
    incidence: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        incidence: List[List[int]] = [[] for _ in range(self.vertex_count)]
        for eid, (u, v) in enumerate(self.ends):
            if u == v:
                raise GraphError(f"edge {eid} is a loop at {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphError(f"edge {eid} has an endpoint out of range")
            incidence[u].append(eid)
            incidence[v].append(eid)
        object.__setattr__(self, "incidence", tuple(tuple(i) for i in incidence))

    @property
    def edge_count(self) -> int:
        return len(self.ends)

    @property
    def edges(self) -> List[Tuple[int, int, int]]:
        """(edge_id, u, v) triples"""
        return [(eid, u, v) for eid, (u, v) in enumerate(self.ends)]

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def other_end(self, eid: int, v: int) -> int:
        u, w = self.ends[eid]
        if v == u:
            return w
        if v == w:
            return u
        raise GraphError(f"edge {eid} is not incident with {v}")

    def copies(self, u: int, v: int) -> List[int]:
        """Ids of the parallel edges between u and v, ascending"""
        return [eid for eid in self.incidence[u] if self.other_end(eid, u) == v]

    def multiplicity(self, u: int, v: int) -> int:
        return len(self.copies(u, v))

    def neighbors(self, v: int) -> List[int]:
        """Distinct neighbours of v, ascending"""
        return sorted({self.other_end(eid, v) for eid in self.incidence[v]})

    def extended(self, extra_vertices: int, extra_edges: Sequence[Edge]) -> "Multigraph":
        """Copy with new vertices and edges appended; existing ids are kept"""
        return Multigraph(self.vertex_count + extra_vertices, self.ends + tuple(extra_edges))


def build_multigraph(graph: SimpleGraph, multiplicity: Mapping[Edge, int]) -> Multigraph:
    """
    Replace every edge of a simple graph by parallel copies.

    Edge ids are handed out in sorted edge order, copies of one edge
    being consecutive, so a given input always yields the same ids.

    Args:
        graph: The underlying simple graph
        multiplicity: Number of copies for every edge; keys may be given
            in either orientation

    Returns:
        The multigraph

    Raises:
        MultiplicityError: If an edge has no multiplicity or a non-positive one
    """
    normalized: Dict[Edge, int] = {}
    for (u, v), k in multiplicity.items():
        normalized[normalize_edge(u, v)] = k
    ends: List[Edge] = []
    for edge in graph.edges():
        k = normalized.get(edge)
        if k is None:
            raise MultiplicityError(f"no multiplicity given for edge {edge[0]} {edge[1]}")
        if k <= 0:
            raise MultiplicityError(f"multiplicity {k} for edge {edge[0]} {edge[1]} is not positive")
        ends.extend([edge] * k)
    return Multigraph(graph.vertex_count, tuple(ends))


def uniform_multiplicity(graph: SimpleGraph, k: int) -> Dict[Edge, int]:
    return {edge: k for edge in graph.edges()}


@dataclass(frozen=True)
class Trail:
    """
    Alternating vertex/edge sequence v0, e1, v1, ..., el, vl with distinct edges.

    Stored as two tuples: vertices (length l+1) and edges (length l). A
    closed trail repeats its first vertex at the end.
    """

    vertices: Tuple[int, ...]
    edges: Tuple[int, ...]
    closed: bool

    def __post_init__(self):
        if len(self.vertices) != len(self.edges) + 1:
            raise TrailError("a trail needs exactly one more vertex than edges")
        if len(set(self.edges)) != len(self.edges):
            raise TrailError("trail repeats an edge")
        if self.closed and self.vertices[0] != self.vertices[-1]:
            raise TrailError("closed trail does not return to its start")

    @property
    def length(self) -> int:
        return len(self.edges)

    def check(self, multigraph: Multigraph) -> None:
        """Raise TrailError unless every edge joins its neighbouring vertices"""
        for i, eid in enumerate(self.edges):
            if not 0 <= eid < multigraph.edge_count:
                raise TrailError(f"unknown edge id {eid}")
            if set(multigraph.ends[eid]) != {self.vertices[i], self.vertices[i + 1]}:
                raise TrailError(
                    f"edge {eid} does not join {self.vertices[i]} and {self.vertices[i + 1]}"
                )

    def covers(self, multigraph: Multigraph) -> bool:
        """True if the trail traverses every edge of the multigraph"""
        return len(self.edges) == multigraph.edge_count

    def rotate(self, i: int) -> "Trail":
        """Closed trail restarted at position i"""
        if not self.closed:
            raise TrailError("only closed trails can be rotated")
        i %= self.length
        vertices = self.vertices[i:] + self.vertices[1:i + 1]
        edges = self.edges[i:] + self.edges[:i]
        return Trail(vertices, edges, True)

    def reversed(self) -> "Trail":
        return Trail(self.vertices[::-1], self.edges[::-1], self.closed)

    def format(self) -> str:
        """Debug dump "v0 (e1) v1 (e2) ..."; not a stable format"""
        parts = [str(self.vertices[0])]
        for eid, v in zip(self.edges, self.vertices[1:]):
            parts.append(f"({eid}) {v}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()


def trail_from_vertices(multigraph: Multigraph, vertices: Sequence[int], closed: bool) -> Trail:
    """
    Transcribe a vertex-only walk into a trail.

    Each step takes the lowest-id parallel edge not used yet.

    Raises:
        TrailError: If consecutive vertices run out of unused edges
    """
    used = set()
    edges: List[int] = []
    for a, b in zip(vertices, vertices[1:]):
        free = [eid for eid in multigraph.copies(a, b) if eid not in used]
        if not free:
            raise TrailError(f"no unused edge left between {a} and {b}")
        used.add(free[0])
        edges.append(free[0])
    return Trail(tuple(vertices), tuple(edges), closed)


def edge_multiset(trail: Trail, multigraph: Multigraph) -> Dict[Edge, int]:
    """Count of traversed copies per underlying edge"""
    counts: Dict[Edge, int] = {}
    for eid in trail.edges:
        key = normalize_edge(*multigraph.ends[eid])
        counts[key] = counts.get(key, 0) + 1
    return counts


def check_vertex(graph: SimpleGraph, v: int) -> None:
    if not 0 <= v < graph.vertex_count:
        raise GraphError(f"vertex {v} out of range")
