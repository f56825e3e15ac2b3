"""Vertex bipartitions: the max-degree stability split, the bipartizing
rewire built on it, and a deterministic local max-cut.

For a triangle-free graph with floor(n^2/4) - k edges, splitting off the
neighborhood of a maximum-degree vertex leaves at most k edges inside the
parts, and rewiring those edges across the cut yields a simple bipartite
graph with exactly internal_x more edges than the input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analytics import find_triangle
from .errors import NotTriangleFreeError
from .graph import Graph, _bits


@dataclass(frozen=True)
class Partition:
    """Two-coloring of the vertices; side Y is the set bits of y_mask."""

    n: int
    y_mask: int
    cross_edges: int
    internal_edges: int

    @classmethod
    def from_mask(cls, g: Graph, y_mask: int) -> "Partition":
        x_mask = ((1 << g.n) - 1) ^ y_mask
        internal = 0
        for v in range(g.n):
            own = y_mask if (y_mask >> v) & 1 else x_mask
            internal += (g.adj[v] & own).bit_count()
        internal //= 2
        return cls(
            n=g.n,
            y_mask=y_mask,
            cross_edges=g.m - internal,
            internal_edges=internal,
        )

    def side(self, v: int) -> bool:
        """False for X, True for Y."""
        return bool((self.y_mask >> v) & 1)

    def sides(self) -> tuple[list[int], list[int]]:
        xs = [v for v in range(self.n) if not (self.y_mask >> v) & 1]
        ys = list(_bits(self.y_mask))
        return xs, ys


@dataclass(frozen=True)
class StabilityReport:
    """Stability split of a triangle-free graph.

    deficit_k = floor(n^2/4) - e(G); whenever it is nonnegative the split
    satisfies internal_x + internal_y <= deficit_k, and internal_y is always
    zero because Y is a neighborhood in a triangle-free graph.
    """

    n: int
    m: int
    partition: Partition
    deficit_k: int
    internal_x: int
    internal_y: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "k": self.deficit_k,
            "internal_x": self.internal_x,
            "internal_y": self.internal_y,
            "sides": [1 if self.partition.side(v) else 0 for v in range(self.n)],
        }


def _require_triangle_free(g: Graph) -> None:
    witness = find_triangle(g)
    if witness is not None:
        raise NotTriangleFreeError(witness)


def stability_partition(g: Graph) -> StabilityReport:
    """Split V into Y = N(v) and X = rest, for the lowest-indexed vertex v of
    maximum degree.  Requires a triangle-free input."""
    _require_triangle_free(g)
    v = max(range(g.n), key=lambda u: (g.adj[u].bit_count(), -u))
    y_mask = g.adj[v]
    part = Partition.from_mask(g, y_mask)
    x_mask = ((1 << g.n) - 1) ^ y_mask
    internal_y = 0
    for u in _bits(y_mask):
        internal_y += (g.adj[u] & y_mask).bit_count()
    internal_y //= 2
    internal_x = part.internal_edges - internal_y
    return StabilityReport(
        n=g.n,
        m=g.m,
        partition=part,
        deficit_k=g.n * g.n // 4 - g.m,
        internal_x=internal_x,
        internal_y=internal_y,
    )


def bipartize_rewire(g: Graph) -> Graph:
    """Replace every intra-X edge of the stability split with cross edges.

    Each vertex w in X sheds its s intra-X edges and gains s edges to its s
    lowest-indexed non-neighbors in Y, s counted in the original graph, so
    each deleted edge adds one new cross edge at either endpoint and
    e(G') = e(G) + internal_x.  The result is simple and bipartite with
    sides X, Y.  d(w) <= d(v) = |Y| guarantees enough room in Y.
    """
    report = stability_partition(g)
    y_mask = report.partition.y_mask
    x_mask = ((1 << g.n) - 1) ^ y_mask

    out = g.copy()
    demand = {}
    for w in _bits(x_mask):
        s = (g.adj[w] & x_mask).bit_count()
        if s:
            demand[w] = s
    for w, s in demand.items():
        for u in _bits(g.adj[w] & x_mask):
            if u > w:
                out.remove_edge(w, u)
    for w in sorted(demand):
        s = demand[w]
        free = y_mask & ~g.adj[w]
        targets = []
        for y in _bits(free):
            targets.append(y)
            if len(targets) == s:
                break
        assert len(targets) == s, "max-degree bound violated: not enough room in Y"
        for y in targets:
            out.add_edge(w, y)
    return out


def local_max_cut(g: Graph, seed: Partition | None = None, count_scans: bool = False):
    """Improve a partition by single-vertex flips until none helps.

    Vertices are scanned in index order and the first improving flip is
    taken; the scan restarts until a full pass makes no move.  At the fixed
    point every vertex has at least as many neighbors across the cut as on
    its own side.  Each flip raises cross_edges by at least 1, so there are
    at most m improving passes.  Defaults to the all-X start.

    With count_scans=True returns (partition, improving_passes).
    """
    y_mask = seed.y_mask if seed is not None else 0
    full = (1 << g.n) - 1
    improving_passes = 0
    while True:
        moved = False
        for v in range(g.n):
            row = g.adj[v]
            opp = row & y_mask if not (y_mask >> v) & 1 else row & (full ^ y_mask)
            cross = opp.bit_count()
            if row.bit_count() - cross > cross:
                y_mask ^= 1 << v
                moved = True
        if not moved:
            break
        improving_passes += 1
        assert improving_passes <= max(g.m, 1), "cut failed to stabilize within m passes"
    part = Partition.from_mask(g, y_mask)
    if count_scans:
        return part, improving_passes
    return part
