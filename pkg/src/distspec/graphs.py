"""Immutable simple graphs, hop distances, and distance-based scalar invariants.

Vertices are always the contiguous labels 0..n-1.  A :class:`Graph` is a value
object: construction validates, derived data is computed on demand.  Distances,
transmissions and the Wiener index are exact integers; remoteness is an exact
:class:`fractions.Fraction` so that equality cases downstream are decidable
without floating-point tolerances.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional

import numpy as np

GRAPH6_MAX_ORDER = 62
_GRAPH6_HEADER = ">>graph6<<"


def triangle_pairs(n: int) -> list[tuple[int, int]]:
    """Strict upper-triangle vertex pairs in graph6 bit order.

    Column-major: (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...  This single
    ordering is shared by the graph6 codec, bitmask enumeration and canonical
    forms, so a canonical bitstring is directly a canonical graph6 payload.
    """
    return [(i, j) for j in range(1, n) for i in range(j)]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertex set {0..n-1}.

    ``edges`` holds each undirected edge once as a pair (u, v) with u < v.
    Instances are immutable, hashable, and safe to share across threads.
    """

    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph order must be at least 1")
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge {e} out of range for order {self.n}")

    @cached_property
    def adjacency(self) -> tuple[frozenset, ...]:
        """Neighbor sets indexed by vertex."""
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int8)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def complement(self) -> "Graph":
        missing = frozenset(p for p in triangle_pairs(self.n) if p not in self.edges)
        return Graph(self.n, missing)

    def relabel(self, perm) -> "Graph":
        """Image of the graph under the vertex map v -> perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        mapped = frozenset(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in self.edges
        )
        return Graph(self.n, mapped)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on n vertices with the given undirected edges (duplicates collapse)."""
    norm = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
        norm.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(norm))


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 line (orders 1..62, single-byte order encoding).

    The payload is the strict upper triangle, column-major, six bits per
    printable character offset by 63.  Length and padding are checked exactly;
    the optional ``>>graph6<<`` header is tolerated.
    """
    s = text.strip()
    if s.startswith(_GRAPH6_HEADER):
        s = s[len(_GRAPH6_HEADER):]
    if not s:
        raise ValueError("empty graph6 string")
    vals = []
    for ch in s:
        o = ord(ch)
        if o < 63 or o > 126:
            raise ValueError(f"invalid graph6 character {ch!r} (ordinal {o})")
        vals.append(o - 63)
    if vals[0] == 63:
        raise ValueError("multi-byte graph6 order encoding (order > 62) is not supported")
    n = vals[0]
    if n < 1:
        raise ValueError("graph6 order 0 is outside the supported domain")
    payload = vals[1:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(payload) < need:
        raise ValueError(f"truncated graph6 payload: need {need} characters, got {len(payload)}")
    if len(payload) > need:
        raise ValueError(f"excess graph6 payload: need {need} characters, got {len(payload)}")
    bits: list[int] = []
    for v in payload:
        bits.extend((v >> k) & 1 for k in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise ValueError("nonzero padding bits in graph6 payload")
    edges = frozenset(p for p, b in zip(triangle_pairs(n), bits) if b)
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode a graph as a single graph6 line; inverse of :func:`parse_graph6`."""
    if g.n > GRAPH6_MAX_ORDER:
        raise ValueError(f"graph6 output supports order <= {GRAPH6_MAX_ORDER}, got {g.n}")
    bits = [1 if p in g.edges else 0 for p in triangle_pairs(g.n)]
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i:i + 6]:
            v = (v << 1) | b
        chars.append(chr(v + 63))
    return "".join(chars)


def _bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            du = dist[u]
            for w in g.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def is_connected(g: Graph) -> bool:
    """True iff a breadth-first search from vertex 0 reaches all n vertices."""
    return all(d >= 0 for d in _bfs_distances(g, 0))


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop distances of a connected graph with cached invariants.

    ``entries`` is a read-only integer array; ``transmissions[v]`` is the row
    sum, ``wiener`` the half of the total sum, ``diameter`` the maximum entry.
    """

    n: int
    entries: np.ndarray
    transmissions: tuple
    diameter: int
    wiener: int

    @property
    def remoteness(self) -> Fraction:
        """max_v Tr(v) / (n - 1) as an exact fraction; undefined for n = 1."""
        if self.n < 2:
            raise ValueError("remoteness is undefined for a single vertex")
        return Fraction(max(self.transmissions), self.n - 1)

    def entry(self, i: int, j: int) -> int:
        return int(self.entries[i, j])


def distance_matrix(g: Graph) -> DistanceMatrix:
    """BFS hop distances from every vertex; raises on disconnected input."""
    rows = []
    for v in range(g.n):
        dist = _bfs_distances(g, v)
        if any(d < 0 for d in dist):
            raise ValueError("graph is disconnected; distances are undefined")
        rows.append(dist)
    d = np.array(rows, dtype=np.int64)
    d.setflags(write=False)
    trans = tuple(int(x) for x in d.sum(axis=1))
    return DistanceMatrix(
        n=g.n,
        entries=d,
        transmissions=trans,
        diameter=int(d.max()) if g.n > 1 else 0,
        wiener=int(d.sum()) // 2,
    )


def remoteness(dm: DistanceMatrix) -> Fraction:
    """Largest average distance from any single vertex, exact."""
    return dm.remoteness


def is_transmission_regular(dm: DistanceMatrix) -> bool:
    """True iff every vertex has the same transmission."""
    return len(set(dm.transmissions)) == 1


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for forests.

    BFS from every root; a non-tree edge (u, w) seen from root r witnesses a
    closed walk of length depth(u) + depth(w) + 1, which always contains a
    cycle no longer than that, and a root on a shortest cycle realises its
    exact length.
    """
    best: Optional[int] = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.adjacency[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif w != parent[u]:
                        cand = dist[u] + dist[w] + 1
                        if best is None or cand < best:
                            best = cand
            frontier = nxt
    return best


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_complete_multipartite(g: Graph) -> Optional[list[int]]:
    """Part sizes (sorted descending) iff the complement is a disjoint clique union."""
    comp = g.complement()
    seen = [False] * g.n
    parts: list[int] = []
    for v in range(g.n):
        if seen[v]:
            continue
        stack = [v]
        seen[v] = True
        members = [v]
        while stack:
            u = stack.pop()
            for w in comp.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
                    members.append(w)
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                if not comp.has_edge(a, b):
                    return None
        parts.append(len(members))
    parts.sort(reverse=True)
    return parts


def is_complete_minus_edge(g: Graph) -> bool:
    """True iff the graph is K_n with exactly one edge removed (n >= 3)."""
    return g.n >= 3 and g.m == g.n * (g.n - 1) // 2 - 1


def min_degree(g: Graph) -> int:
    return min(g.degrees())


@dataclass(frozen=True)
class InvariantReport:
    """Scalar summary of one connected graph."""

    n: int
    m: int
    diameter: int
    girth: Optional[int]
    remoteness: Optional[Fraction]
    wiener: int
    min_degree: int
    is_complete: bool
    complete_multipartite_parts: Optional[list[int]]
    is_transmission_regular: bool


def invariant_report(g: Graph) -> InvariantReport:
    """Compute the full scalar invariant summary; raises on disconnected input."""
    dm = distance_matrix(g)
    return InvariantReport(
        n=g.n,
        m=g.m,
        diameter=dm.diameter,
        girth=girth(g),
        remoteness=dm.remoteness if g.n >= 2 else None,
        wiener=dm.wiener,
        min_degree=min_degree(g),
        is_complete=is_complete(g),
        complete_multipartite_parts=is_complete_multipartite(g),
        is_transmission_regular=is_transmission_regular(dm),
    )
