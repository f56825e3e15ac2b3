"""Exact triangle and book statistics.

The book of an edge is the set of triangles through it; its size equals the
number of common neighbors of the endpoints.  Everything here is a pure
function of an immutable graph and reduces to row intersections plus
popcounts, so it stays exact at any density the vertex cap allows.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import EmptyGraphError, LoopError, MissingEdgeError
from .graph import Graph


@dataclass(frozen=True)
class TriangleStats:
    """Total triangle count plus its density relative to n^3."""

    count: int
    n: int

    @property
    def density(self) -> float:
        return self.count / self.n**3

    def density_str(self) -> str:
        # fixed 12 decimals so report files are byte-stable
        return f"{self.count / self.n**3:.12f}"


@dataclass(frozen=True)
class BookProfile:
    """Per-edge book sizes with the maximizing edge.

    max_edge is the lexicographically smallest edge attaining max_size, so
    profiles of equal graphs are identical.
    """

    per_edge: dict[tuple[int, int], int]
    max_edge: tuple[int, int]
    max_size: int


def codegree(g: Graph, u: int, v: int) -> int:
    """Number of common neighbors of u and v (the pair need not be an edge)."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise LoopError(f"codegree undefined for identical vertices ({u})")
    return (g.adj[u] & g.adj[v]).bit_count()


def book_size(g: Graph, u: int, v: int) -> int:
    """Book size of edge {u, v}.  Defined for existing edges only."""
    if not g.has_edge(u, v):
        raise MissingEdgeError(f"({u}, {v}) is not an edge; book size is undefined")
    return (g.adj[u] & g.adj[v]).bit_count()


def triangle_count(g: Graph) -> TriangleStats:
    """Exact triangle count via the codegree sum over edges (= 3t)."""
    total = 0
    adj = g.adj
    for u in range(g.n):
        row = adj[u]
        high = row >> (u + 1)
        while high:
            low = high & -high
            v = u + 1 + low.bit_length() - 1
            total += (row & adj[v]).bit_count()
            high ^= low
    assert total % 3 == 0
    return TriangleStats(count=total // 3, n=g.n)


def book_profile(g: Graph) -> BookProfile:
    if g.m == 0:
        raise EmptyGraphError("book profile of an edgeless graph is undefined")
    per_edge: dict[tuple[int, int], int] = {}
    best_edge = None
    best = -1
    adj = g.adj
    for u, v in g.edges():
        c = (adj[u] & adj[v]).bit_count()
        per_edge[(u, v)] = c
        if c > best:  # edges() is lexicographic, so first max wins ties
            best = c
            best_edge = (u, v)
    return BookProfile(per_edge=per_edge, max_edge=best_edge, max_size=best)


def book_histogram(g: Graph) -> dict[int, int]:
    """Map book size -> number of edges with that size."""
    if g.m == 0:
        return {}
    counts = Counter(book_profile(g).per_edge.values())
    return dict(sorted(counts.items()))


def max_book(g: Graph) -> int:
    """Largest book size over all edges; 0 for an edgeless graph."""
    best = 0
    adj = g.adj
    for u, v in g.edges():
        c = (adj[u] & adj[v]).bit_count()
        if c > best:
            best = c
    return best


def find_triangle(g: Graph) -> tuple[int, int, int] | None:
    """Some triangle (u, v, w) with u < v < w, or None if triangle-free."""
    adj = g.adj
    for u, v in g.edges():
        common = adj[u] & adj[v]
        if common:
            w = (common & -common).bit_length() - 1
            return tuple(sorted((u, v, w)))
    return None


def analyze_report(g: Graph) -> dict:
    """Summary dict {n, m, t, b, max_edge, histogram} used by report files."""
    t = triangle_count(g)
    if g.m == 0:
        b, max_edge, hist = None, None, {}
    else:
        profile = book_profile(g)
        b, max_edge = profile.max_size, list(profile.max_edge)
        hist = {str(k): v for k, v in sorted(Counter(profile.per_edge.values()).items())}
    return {
        "n": g.n,
        "m": g.m,
        "t": t.count,
        "b": b,
        "max_edge": max_edge,
        "histogram": hist,
    }
