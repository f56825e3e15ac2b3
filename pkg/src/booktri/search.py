"""Exhaustive and heuristic search over graphs with a fixed edge count.

Exhaustive scans enumerate every labeled graph on n vertices with exactly e
edges (n <= 8 unless forced) as bitmasks over the C(n,2) edge slots, in
lexicographic order of the edge subset, and reduce the (max book, triangles)
pairs to a Pareto frontier with one witness per frontier point.  The rank
space partitions into contiguous ranges, so scans parallelize across
processes with an order-independent merge.

Annealing walks the same fixed-edge-count space with single edge swaps,
rejecting any state whose largest book reaches the cap, and reports the best
feasible states seen.  Heuristic results are empirical upper bounds on the
true minimum, never proofs.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np

from .analytics import max_book
from .codec import to_graph6
from .constructions import (
    ConstructionReport,
    as_alpha,
    edwards_generalized,
    rademacher_extremal,
    theorem1_sharp,
)
from .errors import ExplosionGuardError, ParameterError
from .graph import Graph

EXHAUSTIVE_VERTEX_LIMIT = 8
RNG_ALGORITHM = "numpy-pcg64"

_CHUNK = 1 << 19


# -- edge-slot geometry ----------------------------------------------------


def edge_slots(n: int) -> list[tuple[int, int]]:
    """Slot index -> (u, v) with u < v, lexicographic."""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    g = Graph(n)
    slots = edge_slots(n)
    while mask:
        low = mask & -mask
        u, v = slots[low.bit_length() - 1]
        g.adj[u] |= 1 << v
        g.adj[v] |= 1 << u
        g.m += 1
        mask ^= low
    return g


def edge_mask_of(g: Graph) -> int:
    index = {e: i for i, e in enumerate(edge_slots(g.n))}
    mask = 0
    for e in g.edges():
        mask |= 1 << index[e]
    return mask


def unrank_combination(rank: int, total: int, k: int) -> list[int]:
    """The rank-th k-subset of range(total) in lexicographic order."""
    if not 0 <= rank < math.comb(total, k):
        raise ParameterError(f"rank {rank} outside 0..C({total},{k})-1")
    combo = []
    x = 0
    for i in range(k):
        while True:
            c = math.comb(total - 1 - x, k - 1 - i)
            if c > rank:
                break
            rank -= c
            x += 1
        combo.append(x)
        x += 1
    return combo


def rank_of_combination(combo: Sequence[int], total: int) -> int:
    k = len(combo)
    rank = 0
    prev = -1
    for i, c in enumerate(combo):
        for x in range(prev + 1, c):
            rank += math.comb(total - 1 - x, k - 1 - i)
        prev = c
    return rank


def _guard(n: int, e: int, force: bool) -> int:
    slots = math.comb(n, 2)
    if not 0 <= e <= slots:
        raise ParameterError(f"edge count {e} outside 0..{slots} for n={n}")
    if n > EXHAUSTIVE_VERTEX_LIMIT and not force:
        raise ExplosionGuardError(
            f"refusing exhaustive enumeration at n={n} > {EXHAUSTIVE_VERTEX_LIMIT} "
            f"(C({slots},{e}) graphs); force=True overrides, at your own risk"
        )
    return slots


def enumerate_fixed_edges(
    n: int,
    e: int,
    force: bool = False,
    start: int = 0,
    stop: int | None = None,
) -> Iterator[Graph]:
    """Every labeled n-vertex graph with exactly e edges, each exactly once,
    in lexicographic order of its edge subset.

    start/stop select a contiguous rank range (stop exclusive), which is how
    parallel scans partition the space.
    """
    slots = _guard(n, e, force)
    total = math.comb(slots, e)
    stop = total if stop is None else min(stop, total)
    if start < 0 or start > total:
        raise ParameterError(f"start rank {start} outside 0..{total}")
    if e == 0:
        if start == 0 and stop > 0:
            yield Graph(n)
        return
    if start >= stop:
        return
    first = unrank_combination(start, slots, e)
    table = edge_slots(n)
    count = stop - start
    c = first
    emitted = 0
    while True:
        g = Graph(n)
        for i in c:
            u, v = table[i]
            g.adj[u] |= 1 << v
            g.adj[v] |= 1 << u
        g.m = e
        yield g
        emitted += 1
        if emitted == count:
            return
        # lexicographic successor
        j = e - 1
        while c[j] == slots - e + j:
            j -= 1
        c[j] += 1
        for jj in range(j + 1, e):
            c[jj] = c[jj - 1] + 1


# -- frontier record ---------------------------------------------------------


def pareto_min(pairs) -> list[tuple[int, int]]:
    """Componentwise-minimal antichain of (b, t) pairs, sorted by b."""
    out = []
    for b, t in sorted(set(pairs)):
        if not any(pb <= b and pt <= t for pb, pt in out):
            out.append((b, t))
    return out


@dataclass(frozen=True)
class FrontierRecord:
    """Result of one scan: the minima, the Pareto set, and its witnesses."""

    n: int
    e: int
    mode: str  # "exhaustive" | "heuristic"
    min_t: int
    min_b: int
    pareto: list[tuple[int, int]]
    witnesses: list[str]
    scanned: int
    rng: str | None = None
    seed: int | None = None
    params: dict = field(default_factory=dict)

    def min_t_under_cap(self, cap: int) -> int | None:
        """Smallest t among scanned graphs with b < cap (None if none)."""
        feasible = [t for b, t in self.pareto if b < cap]
        return min(feasible) if feasible else None

    def to_json_dict(self) -> dict:
        out = {
            "n": self.n,
            "e": self.e,
            "mode": self.mode,
            "min_t": self.min_t,
            "min_b": self.min_b,
            "pareto": [list(p) for p in self.pareto],
            "witnesses": list(self.witnesses),
            "scanned": self.scanned,
        }
        if self.mode == "heuristic":
            out["rng"] = self.rng
            out["seed"] = self.seed
            out["params"] = dict(self.params)
        return out

    def to_csv(self) -> str:
        lines = ["b,t,witness"]
        lines.extend(
            f"{b},{t},{w}" for (b, t), w in zip(self.pareto, self.witnesses)
        )
        return "\n".join(lines) + "\n"


# -- exhaustive scan ---------------------------------------------------------


def _scan_tables(n: int):
    slots = edge_slots(n)
    index = {e: i for i, e in enumerate(slots)}
    tri_masks = []
    for a, b, c in combinations(range(n), 3):
        tri_masks.append(
            (1 << index[(a, b)]) | (1 << index[(a, c)]) | (1 << index[(b, c)])
        )
    tri = np.array(tri_masks, dtype=np.uint32)
    inc = np.zeros((len(tri_masks), len(slots)), dtype=np.float32)
    for t, m in enumerate(tri_masks):
        while m:
            low = m & -m
            inc[t, low.bit_length() - 1] = 1.0
            m ^= low
    return tri, inc


def _scan_range(args) -> tuple[dict, int]:
    """Scan ranks [start, stop); returns ({(b,t): (rank, mask)}, scanned)."""
    n, e, start, stop = args
    slots = math.comb(n, 2)
    tri, inc = _scan_tables(n)
    shifts = np.arange(slots, dtype=np.uint32)

    best: dict[tuple[int, int], tuple[int, int]] = {}
    if e == 0:
        if start == 0 and stop > 0:
            best[(0, 0)] = (0, 0)
        return best, max(stop - start, 0)

    c = unrank_combination(start, slots, e)
    mask = 0
    for i in c:
        mask |= 1 << i
    buf = np.empty(_CHUNK, dtype=np.uint32)
    done = start
    top = slots - e
    while done < stop:
        k = min(_CHUNK, stop - done)
        for i in range(k):
            buf[i] = mask
            j = e - 1
            if c[j] < slots - 1:
                mask ^= 1 << c[j]
                c[j] += 1
                mask |= 1 << c[j]
            else:
                while j >= 0 and c[j] == top + j:
                    j -= 1
                if j < 0:
                    break  # last combination emitted
                mask ^= 1 << c[j]
                c[j] += 1
                mask |= 1 << c[j]
                for jj in range(j + 1, e):
                    mask ^= 1 << c[jj]
                    c[jj] = c[jj - 1] + 1
                    mask |= 1 << c[jj]
        m = buf[:k]
        pres = (m[:, None] & tri[None, :]) == tri[None, :]
        t_counts = pres.sum(axis=1, dtype=np.int32)
        books = pres.astype(np.float32) @ inc
        epres = ((m[:, None] >> shifts[None, :]) & 1).astype(np.float32)
        b_counts = (books * epres).max(axis=1).astype(np.int32)
        keys = b_counts * 4096 + t_counts
        uniq, first = np.unique(keys, return_index=True)
        for key, fi in zip(uniq.tolist(), first.tolist()):
            pair = (key >> 12, key & 4095)
            rank = done + fi
            prev = best.get(pair)
            if prev is None or prev[0] > rank:
                best[pair] = (rank, int(m[fi]))
        done += k
    return best, stop - start


def extremal_scan(n: int, e: int, threads: int = 1, force: bool = False) -> FrontierRecord:
    """Exact minima and Pareto frontier of (b, t) over every labeled graph
    with n vertices and e edges.

    Witnesses are the lowest-rank graphs achieving each frontier pair, so the
    record is identical for any thread count.
    """
    slots = _guard(n, e, force)
    total = math.comb(slots, e)
    threads = max(1, int(threads))

    jobs = []
    if threads == 1 or total < 2 * _CHUNK:
        merged, scanned = _scan_range((n, e, 0, total))
    else:
        step = -(-total // threads)
        for lo in range(0, total, step):
            jobs.append((n, e, lo, min(lo + step, total)))
        merged: dict[tuple[int, int], tuple[int, int]] = {}
        scanned = 0
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part, count in pool.map(_scan_range, jobs):
                scanned += count
                for pair, entry in part.items():
                    prev = merged.get(pair)
                    if prev is None or prev[0] > entry[0]:
                        merged[pair] = entry

    pairs = list(merged)
    frontier = pareto_min(pairs)
    witnesses = [
        to_graph6(graph_from_edge_mask(n, merged[p][1])) for p in frontier
    ]
    return FrontierRecord(
        n=n,
        e=e,
        mode="exhaustive",
        min_t=min(t for _, t in pairs),
        min_b=min(b for b, _ in pairs),
        pareto=frontier,
        witnesses=witnesses,
        scanned=scanned,
    )


# -- simulated annealing -----------------------------------------------------


@dataclass(frozen=True)
class AnnealParams:
    """Knobs for one annealing run.

    book_cap is a strict upper bound: states with max book >= book_cap are
    rejected outright, keeping the whole walk inside the capped class.
    Temperature decays geometrically per proposal.
    """

    book_cap: int
    budget: int
    seed: int
    init: Graph | None = None
    t0: float = 2.0
    decay: float = 0.9995

    def __post_init__(self):
        if self.budget < 1:
            raise ParameterError(f"budget must be >= 1, got {self.budget}")
        if not 0.0 < self.decay < 1.0:
            raise ParameterError(f"decay must be in (0, 1), got {self.decay}")
        if not 0 <= self.seed < 2**64:
            raise ParameterError("seed must fit in 64 bits")


def _graph_stats(g: Graph) -> tuple[int, int]:
    """(t, b) in one pass of codegrees over the present edges."""
    adj = g.adj
    total = 0
    best = 0
    for u in range(g.n):
        row = adj[u]
        high = row >> (u + 1)
        base = u + 1
        while high:
            low = high & -high
            c = (row & adj[base + low.bit_length() - 1]).bit_count()
            total += c
            if c > best:
                best = c
            high ^= low
    return total // 3, best


def anneal_min_triangles(n: int, e: int, params: AnnealParams) -> FrontierRecord:
    """Minimize the triangle count over graphs with exactly e edges and max
    book below params.book_cap, by Metropolis annealing on single edge swaps.

    A move removes one uniformly random present edge and adds one uniformly
    random edge absent from the pre-move state.  Runs are reproducible from
    the seed (PCG64); the record carries the generator id, seed, and knobs.
    The reported values are upper bounds for the capped minimum, not proofs.
    """
    slots_list = edge_slots(n)
    slots = len(slots_list)
    if not 0 <= e <= slots:
        raise ParameterError(f"edge count {e} outside 0..{slots} for n={n}")
    rng = np.random.Generator(np.random.PCG64(params.seed))

    if params.init is not None:
        if params.init.n != n:
            raise ParameterError(f"init has {params.init.n} vertices, expected {n}")
        if params.init.m != e:
            raise ParameterError(f"init has {params.init.m} edges, expected {e}")
        g = params.init.copy()
        if max_book(g) >= params.book_cap:
            raise ParameterError(
                f"init violates book cap: b={max_book(g)} >= {params.book_cap}"
            )
    else:
        g = None
        for _ in range(200):
            chosen = rng.choice(slots, size=e, replace=False)
            cand = Graph(n)
            for idx in chosen:
                u, v = slots_list[int(idx)]
                cand.add_edge(u, v)
            if max_book(cand) < params.book_cap:
                g = cand
                break
        if g is None:
            raise ParameterError(
                f"no feasible random start under book cap {params.book_cap}; "
                "provide init explicitly"
            )

    index = {s: i for i, s in enumerate(slots_list)}
    present = [index[ed] for ed in g.edges()]
    present_pos = {s: i for i, s in enumerate(present)}
    absent = [i for i in range(slots) if i not in present_pos]
    absent_pos = {s: i for i, s in enumerate(absent)}

    def remove_from(pool, pos, slot):
        i = pos.pop(slot)
        last = pool.pop()
        if i < len(pool):
            pool[i] = last
            pos[last] = i

    def push(pool, pos, slot):
        pos[slot] = len(pool)
        pool.append(slot)

    cur_t, cur_b = _graph_stats(g)

    # per-b best t with first-seen witness; pruned to an antichain at the end
    best_by_b: dict[int, tuple[int, int, str]] = {}

    def record_state(t, b, step):
        prev = best_by_b.get(b)
        if prev is None or t < prev[0]:
            best_by_b[b] = (t, step, to_graph6(g))

    record_state(cur_t, cur_b, 0)
    temp = params.t0

    # with all or no slots occupied the space is a single graph: nothing to swap
    steps = params.budget if present and absent else 0
    for step in range(1, steps + 1):
        ri = int(rng.integers(0, len(present)))
        ai = int(rng.integers(0, len(absent)))
        rem_slot = present[ri]
        add_slot = absent[ai]
        ru, rv = slots_list[rem_slot]
        au, av = slots_list[add_slot]

        g.remove_edge(ru, rv)
        g.add_edge(au, av)
        nxt_t, nxt_b = _graph_stats(g)

        accept = False
        if nxt_b < params.book_cap:
            delta = nxt_t - cur_t
            if delta <= 0:
                accept = True
            else:
                accept = rng.random() < math.exp(-delta / temp)
        if accept:
            remove_from(present, present_pos, rem_slot)
            push(present, present_pos, add_slot)
            remove_from(absent, absent_pos, add_slot)
            push(absent, absent_pos, rem_slot)
            cur_t, cur_b = nxt_t, nxt_b
            record_state(cur_t, cur_b, step)
        else:
            g.remove_edge(au, av)
            g.add_edge(ru, rv)
        temp *= params.decay

    states = [(b, t, step, g6) for b, (t, step, g6) in best_by_b.items()]
    frontier = pareto_min([(b, t) for b, t, _, _ in states])
    by_pair = {(b, t): (step, g6) for b, t, step, g6 in states}
    witnesses = [by_pair[p][1] for p in frontier]
    return FrontierRecord(
        n=n,
        e=e,
        mode="heuristic",
        min_t=min(t for _, t, _, _ in states),
        min_b=min(b for b, _, _, _ in states),
        pareto=frontier,
        witnesses=witnesses,
        scanned=steps + 1,
        rng=RNG_ALGORITHM,
        seed=params.seed,
        params={
            "book_cap": params.book_cap,
            "budget": params.budget,
            "t0": params.t0,
            "decay": params.decay,
        },
    )


# -- alpha sweep --------------------------------------------------------------


@dataclass(frozen=True)
class SweepEntry:
    """Best known triangle count under the book cap for one alpha.

    best_t is an empirical upper bound on the capped minimum (the exact
    optimum is unknown in general); source names the generator or run that
    achieved it, or "none" when nothing feasible was found.
    """

    alpha: Fraction
    b_cap: int
    best_t: int | None
    source: str
    graph6: str | None


def strict_book_cap(n: int, alpha: Fraction) -> int:
    """Smallest integer cap with (b < cap) equivalent to (b < alpha*n/2)."""
    x = alpha * n / 2
    fl = x.numerator // x.denominator
    return fl if x.denominator == 1 else fl + 1


def alpha_sweep(
    n: int,
    alphas: Sequence,
    *,
    seed: int,
    budget: int = 20000,
) -> list[SweepEntry]:
    """Best known t at floor(n^2/4)+1 edges under each book cap alpha*n/2.

    For every alpha the applicable generators are tried (the two-sided
    tripartite family below 1/2, the rewired-vertex family above 1/2, the
    bipartite-plus-edge family when its book fits the cap), and an annealing
    run seeded by the best in-class generator tries to improve on them.
    Generators whose book meets the cap are preferred; when none does (the
    cap can sit at or below the forced book minimum at small n) the entry
    falls back to the best applicable generator, whose book then touches
    the cap boundary.  The tripartite family carries floor(n^2/4) edges,
    one below the threshold class, so for alpha < 1/2 annealing is skipped
    (no in-class seed under the cap).  Entries are empirical upper bounds
    only, never proofs of optimality.
    """
    target_e = n * n // 4 + 1
    entries = []
    for i, raw in enumerate(alphas):
        alpha = as_alpha(raw)
        if not Fraction(1, 3) < alpha < 1:
            raise ParameterError(f"alpha must be in (1/3, 1), got {alpha}")
        cap = strict_book_cap(n, alpha)
        candidates: list[tuple[str, ConstructionReport]] = []
        if alpha < Fraction(1, 2):
            try:
                candidates.append(("edwards_generalized", edwards_generalized(n, alpha)))
            except ParameterError:
                pass
        if alpha > Fraction(1, 2) and n % 2 == 0:
            try:
                candidates.append(("theorem1_sharp", theorem1_sharp(n, alpha)))
            except ParameterError:
                pass
        try:
            rad = rademacher_extremal(n)
            if rad.predicted_b < cap:
                candidates.append(("rademacher_extremal", rad))
        except ParameterError:
            pass
        feasible = [(name, r) for name, r in candidates if r.predicted_b < cap]

        if not candidates:
            entries.append(SweepEntry(alpha, cap, None, "none", None))
            continue

        name, best = min(feasible or candidates, key=lambda c: c[1].predicted_t)
        best_t = best.predicted_t
        best_g6 = to_graph6(best.graph)
        source = name

        seeds = [(nm, r) for nm, r in feasible if r.e == target_e]
        if seeds:
            _, seed_report = min(seeds, key=lambda c: c[1].predicted_t)
            run = anneal_min_triangles(
                n,
                target_e,
                AnnealParams(
                    book_cap=cap,
                    budget=budget,
                    seed=(seed + i) % 2**64,
                    init=seed_report.graph,
                ),
            )
            if run.min_t < best_t:
                best_t = run.min_t
                source = "anneal"
                idx = min(
                    range(len(run.pareto)), key=lambda j: run.pareto[j][1]
                )
                best_g6 = run.witnesses[idx]
        entries.append(SweepEntry(alpha, cap, best_t, source, best_g6))
    return entries


def sweep_to_csv(entries: Sequence[SweepEntry]) -> str:
    lines = ["alpha,b_cap,t,source"]
    for s in entries:
        t = "" if s.best_t is None else str(s.best_t)
        lines.append(f"{s.alpha},{s.b_cap},{t},{s.source}")
    return "\n".join(lines) + "\n"
