"""Shared brute-force oracles and random graph generators.

The oracles deliberately avoid the library's bitset code paths: adjacency is
rebuilt as plain Python sets and triangles are counted by explicit vertex
triples, so tests compare two independent routes to the same quantity.
"""

from __future__ import annotations

import random
from itertools import combinations

import booktri as bt


def adjacency_sets(g: bt.Graph) -> list[set[int]]:
    adj = [set() for _ in range(g.n)]
    for u, v in g.edges():
        adj[u].add(v)
        adj[v].add(u)
    return adj


def brute_triangle_count(g: bt.Graph) -> int:
    """Triangle count by explicit triple enumeration (the slow oracle)."""
    adj = adjacency_sets(g)
    return sum(
        1
        for a, b, c in combinations(range(g.n), 3)
        if b in adj[a] and c in adj[a] and c in adj[b]
    )


def brute_book_sizes(g: bt.Graph) -> dict[tuple[int, int], int]:
    """Per-edge common-neighbor counts via set intersections."""
    adj = adjacency_sets(g)
    return {(u, v): len(adj[u] & adj[v]) for u, v in g.edges()}


def brute_max_book(g: bt.Graph) -> int:
    sizes = brute_book_sizes(g)
    return max(sizes.values()) if sizes else 0


def random_graph(rng: random.Random, n: int, p: float) -> bt.Graph:
    g = bt.new_graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


def random_triangle_free(rng: random.Random, n: int, p: float) -> bt.Graph:
    """Random graph cleaned by one greedy pass: any edge that still has a
    common neighbor when visited is deleted.  Deletions never create common
    neighbors, so the survivors form a triangle-free graph."""
    adj = [set() for _ in range(n)]
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u].add(v)
                adj[v].add(u)
                edges.append((u, v))
    for u, v in edges:
        if v in adj[u] and adj[u] & adj[v]:
            adj[u].discard(v)
            adj[v].discard(u)
    g = bt.new_graph(n)
    for u in range(n):
        for v in adj[u]:
            if v > u:
                g.add_edge(u, v)
    return g


def bipartite_minus_matching(rng: random.Random, a: int, b: int) -> bt.Graph:
    g = bt.complete_bipartite(a, b)
    k = rng.randint(0, min(a, b))
    rows = rng.sample(range(a), k)
    cols = rng.sample(range(b), k)
    for i, j in zip(rows, cols):
        g.remove_edge(i, a + j)
    return g


def cycle(n: int) -> bt.Graph:
    return bt.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> bt.Graph:
    return bt.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> bt.Graph:
    return bt.from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
