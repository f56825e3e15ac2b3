#!/usr/bin/env python3
"""Exhaustively map the (largest book, triangle count) plane at the edge
threshold floor(n^2/4)+1 for small n.

Every labeled graph with the given edge count is enumerated (bitmask subsets
of the C(n,2) edge slots), so the reported minima are exact: min t hits
floor(n/2) and min b stays above n/6 at every size scanned.  Pass --full to
include n = 8 (21.5 million graphs, about a minute with two workers).
"""

import argparse
import os
import time

import booktri as bt


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--full", action="store_true", help="include n = 8")
    args = ap.parse_args()
    top = 9 if args.full else 8
    threads = min(2, os.cpu_count() or 1)

    print("=" * 72)
    print("  EXHAUSTIVE (b, t) FRONTIER AT e = floor(n^2/4) + 1")
    print("=" * 72)
    print(f"\n  {'n':>2} {'e':>3} {'graphs':>12} {'min_t':>6} {'floor(n/2)':>10} "
          f"{'min_b':>6} {'floor(n/6)+1':>12} {'time':>8}")
    records = {}
    for n in range(4, top):
        e = n * n // 4 + 1
        t0 = time.time()
        rec = bt.extremal_scan(n, e, threads=threads if n >= 8 else 1)
        dt = time.time() - t0
        records[n] = rec
        print(f"  {n:>2} {e:>3} {rec.scanned:>12} {rec.min_t:>6} {n // 2:>10} "
              f"{rec.min_b:>6} {n // 6 + 1:>12} {dt:>7.2f}s")

    print("\nPareto frontiers (no achieved pair is below-left of another):")
    for n, rec in records.items():
        pretty = ", ".join(f"(b={b}, t={t})" for b, t in rec.pareto)
        print(f"  n={n}: {pretty}")

    n = max(records)
    rec = records[n]
    print(f"\nWitnesses for n={n} re-verified from graph6:")
    for (b, t), w in zip(rec.pareto, rec.witnesses):
        g = bt.from_graph6(w)
        print(f"  {w:12s} -> t={bt.triangle_count(g).count}, b={bt.max_book(g)} "
              f"(recorded t={t}, b={b})")

    print("\nMinimum t as the book cap rises (non-increasing by definition):")
    rec = records[6 if 6 in records else n]
    caps = range(1, rec.n)
    row = {c: rec.min_t_under_cap(c) for c in caps}
    print("  " + ", ".join(f"b<{c}: {v if v is not None else '-'}" for c, v in row.items()))


if __name__ == "__main__":
    main()
