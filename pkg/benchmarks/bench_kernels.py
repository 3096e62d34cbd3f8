#!/usr/bin/env python3
"""Benchmark: compiled kernels vs the pure-Python fallback.

Times the edge-decision batch (the construction hot loop), the planarity
crossing scan, and a full build at several sizes. Run:

    python benchmarks/bench_kernels.py [--sizes 30,60,100] [--repeat 3]
"""

import argparse
import time

from rectdel import AspectRatio, build_triangulation, generate_points
from rectdel.kernels import HAVE_FAST, pure

if HAVE_FAST:
    from rectdel.kernels import _fast
else:
    _fast = None


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels(n, seed, repeat):
    ps = generate_points(n, seed)
    aspect = AspectRatio.parse("2")
    T = build_triangulation(ps, aspect)
    sqx, sqy = T.sq_x, T.sq_y
    edges = [list(e) for e in T.edges]
    rows = []
    for name, kern in (("fast", _fast), ("pure", pure)):
        if kern is None:
            continue
        t_edges = _time(lambda: kern.all_edges(sqx, sqy), repeat)
        t_cross = _time(lambda: kern.crossing_pairs(T.ix, T.iy, edges), repeat)
        t_coll = _time(lambda: kern.collinear_triples(T.ix, T.iy), repeat)
        rows.append((name, t_edges, t_cross, t_coll))
    return rows


def bench_build(n, seed, repeat):
    ps = generate_points(n, seed)
    aspect = AspectRatio.parse("2")
    return _time(lambda: build_triangulation(ps, aspect), repeat)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="30,60,100")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if not HAVE_FAST:
        print("note: compiled kernels are not built; pure numbers only\n")
    print(f"{'n':>5} {'kernel':>6} {'all_edges':>12} {'crossings':>12} {'collinear':>12}")
    for n in sizes:
        for name, t_edges, t_cross, t_coll in bench_kernels(n, args.seed, args.repeat):
            print(f"{n:>5} {name:>6} {t_edges * 1e3:>10.2f}ms {t_cross * 1e3:>10.2f}ms "
                  f"{t_coll * 1e3:>10.2f}ms")
    print()
    print(f"{'n':>5} {'build (selected kernel)':>24}")
    for n in sizes:
        t = bench_build(n, args.seed, args.repeat)
        print(f"{n:>5} {t * 1e3:>22.2f}ms")


if __name__ == "__main__":
    main()
