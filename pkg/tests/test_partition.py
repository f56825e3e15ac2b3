import random
from itertools import product

import pytest

import booktri as bt
from conftest import (
    adjacency_sets,
    bipartite_minus_matching,
    complete,
    cycle,
    path,
    random_graph,
    random_triangle_free,
)


def _is_bipartite_on(g, y_mask):
    """No edge inside Y and none inside X for the given split."""
    for u, v in g.edges():
        if ((y_mask >> u) & 1) == ((y_mask >> v) & 1):
            return False
    return True


def test_stability_c5_trace():
    report = bt.stability_partition(cycle(5))
    assert report.deficit_k == 25 // 4 - 5 == 1
    xs, ys = report.partition.sides()
    assert ys == [1, 4] and xs == [0, 2, 3]
    assert report.internal_x == 1 and report.internal_y == 0
    assert report.internal_x <= report.deficit_k


def test_stability_balanced_bipartite():
    report = bt.stability_partition(bt.complete_bipartite(6, 6))
    assert report.deficit_k == 0
    assert report.internal_x == 0 and report.internal_y == 0


def test_stability_rejects_triangles():
    with pytest.raises(bt.NotTriangleFreeError) as exc:
        bt.stability_partition(complete(3))
    assert exc.value.witness == (0, 1, 2)


def test_stability_report_json():
    d = bt.stability_partition(cycle(5)).to_json_dict()
    assert d == {
        "n": 5,
        "m": 5,
        "k": 1,
        "internal_x": 1,
        "internal_y": 0,
        "sides": [0, 1, 0, 0, 1],
    }


def test_rewire_c5():
    out = bt.bipartize_rewire(cycle(5))
    assert out.m == 6
    y_mask = bt.stability_partition(cycle(5)).partition.y_mask
    assert _is_bipartite_on(out, y_mask)
    assert out.m == out.edge_count_recount()


def test_rewire_already_bipartite():
    g = bt.complete_bipartite(4, 4)
    assert bt.bipartize_rewire(g) == g


def test_rewire_path4():
    g = path(4)
    report = bt.stability_partition(g)
    out = bt.bipartize_rewire(g)
    assert out.m == g.m + report.internal_x == 3
    assert _is_bipartite_on(out, report.partition.y_mask)


def test_rewire_rejects_triangles():
    with pytest.raises(bt.NotTriangleFreeError):
        bt.bipartize_rewire(complete(4))


def test_stability_bound_random_family():
    rng = random.Random(55)
    for trial in range(800):
        if trial % 3 == 0:
            a = rng.randint(2, 20)
            g = bipartite_minus_matching(rng, a, rng.randint(2, 20))
        else:
            g = random_triangle_free(rng, rng.randint(5, 48), rng.random() * 0.6)
        assert bt.find_triangle(g) is None
        report = bt.stability_partition(g)
        assert report.deficit_k >= 0, "triangle-free graphs cannot exceed n^2/4 edges"
        assert report.internal_y == 0
        assert report.internal_x + report.internal_y <= report.deficit_k
        out = bt.bipartize_rewire(g)
        assert out.m == g.m + report.internal_x
        assert out.m <= g.n * g.n // 4
        assert _is_bipartite_on(out, report.partition.y_mask)
        assert out.m == out.edge_count_recount()


def test_partition_from_mask_counts():
    g = complete(4)
    part = bt.Partition.from_mask(g, 0b0011)
    assert part.cross_edges == 4 and part.internal_edges == 2
    assert part.cross_edges + part.internal_edges == g.m


def test_local_max_cut_bipartite_optimum():
    g = bt.complete_bipartite(5, 5)
    seed = bt.Partition.from_mask(g, ((1 << 5) - 1) << 5)
    part = bt.local_max_cut(g, seed)
    assert part.y_mask == seed.y_mask
    assert part.cross_edges == 25


def test_local_max_cut_k4():
    part = bt.local_max_cut(complete(4))
    # every local optimum of K4 is a 2+2 split: brute force over all 2^4 seeds
    assert part.cross_edges == 4
    best = max(
        bt.Partition.from_mask(complete(4), m).cross_edges for m in range(16)
    )
    assert part.cross_edges == best


def test_local_max_cut_empty_graph():
    g = bt.new_graph(6)
    seed = bt.Partition.from_mask(g, 0b010101)
    part = bt.local_max_cut(g, seed)
    assert part.y_mask == seed.y_mask


def test_local_max_cut_contract():
    """Every vertex ends with at least as many cross neighbors as same-side
    neighbors, within m improving passes."""
    rng = random.Random(99)
    for _ in range(300):
        n = rng.randint(2, 48)
        g = random_graph(rng, n, rng.random())
        part, passes = bt.local_max_cut(g, count_scans=True)
        assert passes <= max(g.m, 1)
        adj = adjacency_sets(g)
        for v in range(n):
            same = sum(1 for w in adj[v] if part.side(w) == part.side(v))
            cross = len(adj[v]) - same
            assert cross >= same


def test_local_max_cut_deterministic():
    rng = random.Random(4)
    g = random_graph(rng, 20, 0.5)
    for seed_mask in (0, 0b1010101010):
        seed = bt.Partition.from_mask(g, seed_mask)
        a = bt.local_max_cut(g, seed)
        b = bt.local_max_cut(g, seed)
        assert a == b


def test_local_max_cut_never_decreases_cut():
    rng = random.Random(12)
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 30), rng.random())
        for y_mask, _ in zip(
            (rng.getrandbits(g.n) for _ in range(3)), range(3)
        ):
            seed = bt.Partition.from_mask(g, y_mask)
            part = bt.local_max_cut(g, seed)
            assert part.cross_edges >= seed.cross_edges
