"""Bitset-backed simple undirected graphs on labeled vertices.

Adjacency rows are Python integers used as n-bit sets, so neighborhood
intersections are a single ``&`` and common-neighbor counts a single
``int.bit_count()``.  The vertex cap keeps rows at a fixed small size
(1024 bits = 16 machine words).
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import BoundsError, GraphSizeError, LoopError

MAX_VERTICES = 1024


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph with bitset adjacency rows.

    Rows stay symmetric and loop-free through every mutation.  The mutating
    methods are intended for a single-owner build phase; once built, a graph
    can be shared freely between concurrent readers.
    """

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int):
        if not isinstance(n, int) or not 1 <= n <= MAX_VERTICES:
            raise GraphSizeError(f"vertex count {n!r} outside 1..{MAX_VERTICES}")
        self.n = n
        self.adj = [0] * n
        self.m = 0

    # -- validation -------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise BoundsError(f"vertex {v!r} outside 0..{self.n - 1}")

    def _check_pair(self, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise LoopError(f"self-loop at vertex {u}")

    # -- mutation (build phase) -------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        """Set edge {u, v}; idempotent.  Returns self for chaining."""
        self._check_pair(u, v)
        if not (self.adj[u] >> v) & 1:
            self.adj[u] |= 1 << v
            self.adj[v] |= 1 << u
            self.m += 1
        return self

    def remove_edge(self, u: int, v: int) -> "Graph":
        """Clear edge {u, v}; idempotent."""
        self._check_pair(u, v)
        if (self.adj[u] >> v) & 1:
            self.adj[u] &= ~(1 << v)
            self.adj[v] &= ~(1 << u)
            self.m -= 1
        return self

    # -- queries ------------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        self._check_pair(u, v)
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(_bits(self.adj[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            high = self.adj[u] >> (u + 1)
            for off in _bits(high):
                yield (u, u + 1 + off)

    def edge_count_recount(self) -> int:
        """Recount edges from the rows (cache cross-check)."""
        return sum(row.bit_count() for row in self.adj) // 2

    def copy(self) -> "Graph":
        g = Graph.__new__(Graph)
        g.n = self.n
        g.adj = list(self.adj)
        g.m = self.m
        return g

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and other.n == self.n and other.adj == self.adj
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def new_graph(n: int) -> Graph:
    """Empty graph on n vertices (1 <= n <= 1024)."""
    return Graph(n)


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: vertices 0..a-1 on one side, a..a+b-1 on the other."""
    if a < 1 or b < 1:
        raise GraphSizeError(f"part sizes must be positive, got {a}, {b}")
    if a + b > MAX_VERTICES:
        raise GraphSizeError(f"total vertex count {a + b} exceeds {MAX_VERTICES}")
    g = Graph(a + b)
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    for u in range(a):
        g.adj[u] = right
    for v in range(a, a + b):
        g.adj[v] = left
    g.m = a * b
    return g


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on n vertices with exactly the listed edges (duplicates collapse)."""
    g = Graph(n)
    for u, v in edges:
        g.add_edge(u, v)
    return g
