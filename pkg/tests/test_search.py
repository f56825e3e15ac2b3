import json
import math
import random
from fractions import Fraction
from itertools import combinations

import pytest

import booktri as bt
from booktri.search import rank_of_combination, unrank_combination
from conftest import brute_max_book, brute_triangle_count


def test_enumerate_counts():
    assert sum(1 for _ in bt.enumerate_fixed_edges(3, 3)) == 1
    assert sum(1 for _ in bt.enumerate_fixed_edges(4, 2)) == 15
    assert sum(1 for _ in bt.enumerate_fixed_edges(6, 10)) == 3003


def test_enumerate_single_graph_is_triangle():
    (g,) = list(bt.enumerate_fixed_edges(3, 3))
    assert g.m == 3 and brute_triangle_count(g) == 1


def test_enumerate_unique_and_ordered():
    masks = []
    slots = {e: i for i, e in enumerate(bt.search.edge_slots(5))}
    for g in bt.enumerate_fixed_edges(5, 4):
        mask = 0
        for e in g.edges():
            mask |= 1 << slots[e]
        masks.append(mask)
    assert len(masks) == math.comb(10, 4)
    assert len(set(masks)) == len(masks)
    combos = [tuple(sorted(i for i in range(10) if (m >> i) & 1)) for m in masks]
    assert combos == sorted(combos), "must follow lexicographic subset order"
    assert combos == list(combinations(range(10), 4))


def test_enumerate_rank_ranges_stitch():
    full = [bt.to_graph6(g) for g in bt.enumerate_fixed_edges(5, 3)]
    pieces = []
    for lo, hi in ((0, 40), (40, 41), (41, 120), (120, 999)):
        pieces.extend(
            bt.to_graph6(g) for g in bt.enumerate_fixed_edges(5, 3, start=lo, stop=hi)
        )
    assert pieces == full


def test_unrank_rank_roundtrip():
    combos = list(combinations(range(8), 3))
    for rank, combo in enumerate(combos):
        assert unrank_combination(rank, 8, 3) == list(combo)
        assert rank_of_combination(combo, 8) == rank


def test_enumerate_guard():
    with pytest.raises(bt.ExplosionGuardError):
        list(bt.enumerate_fixed_edges(9, 21))
    assert sum(1 for _ in bt.enumerate_fixed_edges(9, 1, force=True)) == 36


def test_enumerate_bad_edge_count():
    with pytest.raises(bt.ParameterError):
        list(bt.enumerate_fixed_edges(4, 7))


def _oracle_scan(n, e):
    """Independent frontier: enumerate graphs, count via set-based oracles."""
    pairs = {}
    for rank, g in enumerate(bt.enumerate_fixed_edges(n, e)):
        key = (brute_max_book(g), brute_triangle_count(g))
        if key not in pairs:
            pairs[key] = bt.to_graph6(g)
    frontier = bt.pareto_min(pairs)
    return {
        "min_t": min(t for _, t in pairs),
        "min_b": min(b for b, _ in pairs),
        "pareto": frontier,
        "witnesses": [pairs[p] for p in frontier],
        "scanned": rank + 1,
    }


@pytest.mark.parametrize("n,e", [(5, 7), (6, 10)])
def test_extremal_scan_matches_oracle(n, e):
    record = bt.extremal_scan(n, e)
    oracle = _oracle_scan(n, e)
    assert record.min_t == oracle["min_t"]
    assert record.min_b == oracle["min_b"]
    assert record.pareto == oracle["pareto"]
    assert record.witnesses == oracle["witnesses"]
    assert record.scanned == oracle["scanned"] == math.comb(math.comb(n, 2), e)


def test_extremal_scan_known_values():
    record = bt.extremal_scan(6, 10)
    assert record.min_t == 3 and record.min_b == 2
    assert record.pareto == [(2, 4), (3, 3)]


def test_extremal_scan_thread_invariant():
    a = bt.extremal_scan(6, 10, threads=1)
    b = bt.extremal_scan(6, 10, threads=2)
    assert json.dumps(a.to_json_dict()) == json.dumps(b.to_json_dict())


def test_witnesses_reverify():
    record = bt.extremal_scan(6, 10)
    for (b, t), w in zip(record.pareto, record.witnesses):
        g = bt.from_graph6(w)
        assert g.m == 10
        assert bt.triangle_count(g).count == t
        assert bt.max_book(g) == b


def test_frontier_monotone_under_cap():
    record = bt.extremal_scan(6, 10)
    values = [record.min_t_under_cap(c) for c in range(1, 8)]
    seen = [v for v in values if v is not None]
    assert all(a >= b for a, b in zip(seen, seen[1:]))
    assert record.min_t_under_cap(0) is None


def test_scan_guard():
    with pytest.raises(bt.ExplosionGuardError):
        bt.extremal_scan(9, 21)


def test_anneal_reaches_exhaustive_minimum():
    params = bt.AnnealParams(book_cap=7, budget=10**5, seed=1)
    record = bt.anneal_min_triangles(6, 10, params)
    assert record.min_t == bt.extremal_scan(6, 10).min_t == 3
    assert record.mode == "heuristic"
    assert record.scanned == 10**5 + 1


def test_anneal_matches_exhaustive_5_7():
    params = bt.AnnealParams(book_cap=6, budget=10**5, seed=2)
    record = bt.anneal_min_triangles(5, 7, params)
    assert record.min_t == bt.extremal_scan(5, 7).min_t == 2


def test_anneal_reproducible():
    params = bt.AnnealParams(book_cap=7, budget=20000, seed=42)
    a = bt.anneal_min_triangles(6, 10, params)
    b = bt.anneal_min_triangles(6, 10, params)
    assert json.dumps(a.to_json_dict()) == json.dumps(b.to_json_dict())
    assert a.rng == "numpy-pcg64" and a.seed == 42


def test_anneal_respects_cap():
    params = bt.AnnealParams(book_cap=3, budget=5000, seed=5)
    record = bt.anneal_min_triangles(7, 11, params)
    for (b, _), w in zip(record.pareto, record.witnesses):
        assert b < 3
        assert bt.max_book(bt.from_graph6(w)) == b


def test_anneal_rademacher_floor():
    # any feasible 12-vertex graph with 37 edges has at least 6 triangles
    params = bt.AnnealParams(book_cap=12, budget=20000, seed=1)
    record = bt.anneal_min_triangles(12, 37, params)
    assert record.min_t >= 6


def test_anneal_keeps_best_seen_from_init():
    init = bt.edwards_generalized(30, Fraction(2, 5))
    params = bt.AnnealParams(book_cap=6, budget=3000, seed=3, init=init.graph)
    record = bt.anneal_min_triangles(30, init.e, params)
    assert record.min_t <= init.predicted_t


def test_anneal_init_validation():
    init = bt.complete_bipartite(3, 3)
    with pytest.raises(bt.ParameterError):
        bt.anneal_min_triangles(6, 10, bt.AnnealParams(book_cap=7, budget=10, seed=1, init=init))
    dense = bt.rademacher_extremal(6).graph  # b = 3
    with pytest.raises(bt.ParameterError):
        bt.anneal_min_triangles(6, 10, bt.AnnealParams(book_cap=3, budget=10, seed=1, init=dense))


def test_anneal_params_validation():
    with pytest.raises(bt.ParameterError):
        bt.AnnealParams(book_cap=3, budget=0, seed=1)
    with pytest.raises(bt.ParameterError):
        bt.AnnealParams(book_cap=3, budget=10, seed=1, decay=1.5)
    with pytest.raises(bt.ParameterError):
        bt.AnnealParams(book_cap=3, budget=10, seed=-1)


def test_strict_book_cap():
    # cap is the smallest integer making (b < cap) equal to (b < alpha*n/2)
    assert bt.strict_book_cap(40, Fraction(11, 20)) == 11  # 11.0 -> b <= 10
    assert bt.strict_book_cap(42, Fraction(11, 20)) == 12  # 11.55 -> b <= 11
    assert bt.strict_book_cap(30, Fraction(2, 5)) == 6


def test_alpha_sweep_dispatch():
    entries = bt.alpha_sweep(40, [Fraction(7, 20)], seed=1, budget=500)
    assert entries[0].source == "edwards_generalized"
    assert entries[0].best_t == 588


def test_alpha_sweep_high_alpha_density():
    (entry,) = bt.alpha_sweep(40, [Fraction(9, 10)], seed=1, budget=2000)
    assert entry.best_t is not None
    assert abs(entry.best_t / (40 * 40 / 4) - 0.09) <= 0.1


def test_alpha_sweep_range_error():
    with pytest.raises(bt.ParameterError):
        bt.alpha_sweep(40, [Fraction(1, 5)], seed=1)


def test_sweep_csv_format():
    entries = bt.alpha_sweep(40, ["7/20", "9/10"], seed=1, budget=500)
    csv = bt.sweep_to_csv(entries)
    lines = csv.strip().splitlines()
    assert lines[0] == "alpha,b_cap,t,source"
    assert lines[1].startswith("7/20,7,")
    assert len(lines) == 3


def test_graph_from_edge_mask_roundtrip():
    rng = random.Random(1)
    for _ in range(50):
        n = rng.randint(2, 10)
        slots = math.comb(n, 2)
        mask = rng.getrandbits(slots)
        g = bt.graph_from_edge_mask(n, mask)
        assert bt.search.edge_mask_of(g) == mask
