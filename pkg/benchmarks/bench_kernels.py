"""Compare the compiled and pure-Python brute-force kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Prints one row per workload with the best-of-N time for each backend and
the speedup. Results from both backends are checked for equality first.
"""

import argparse
import time

from bartholdi import kernels
from bartholdi.arcs import build_arcs, matrix_T
from bartholdi.graph import Graph, complete_graph, cycle_graph, random_graph


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def _dense(m, seed=0):
    # seeded graph on 7 vertices with exactly m edges
    n = 7
    for s in range(seed, seed + 10_000):
        g = random_graph(n, "1/2", s)
        if g.m == m:
            return g
    raise RuntimeError(f"no graph with {m} edges")


def workloads():
    for m in (6, 7, 8, 9, 10):
        g = _dense(m)
        T = matrix_T(build_arcs(g))
        yield f"minor sums, {2 * m} arcs", (
            lambda b, T=T, m=m: kernels.semi_principal_minor_sums(T, m, backend=b)
        )
    for g, k in ((complete_graph(4), 8), (cycle_graph(8), 8), (Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (0, 3)]), 8)):
        a = build_arcs(g)
        yield f"walk counts, {a.size} arcs, k={k}", (
            lambda b, a=a, m=g.m, k=k: kernels.closed_walk_bump_counts(a.tails, a.heads, m, k, backend=b)
        )


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    if kernels.BACKEND != "cython":
        print("compiled kernels unavailable; only the pure-Python backend can run")
        return 1
    print(f"{'workload':<32} {'cython s':>10} {'python s':>10} {'speedup':>8}")
    for name, fn in workloads():
        assert fn("cython") == fn("python"), name
        tc = _best(lambda: fn("cython"), args.repeat)
        tp = _best(lambda: fn("python"), args.repeat)
        print(f"{name:<32} {tc:>10.4f} {tp:>10.4f} {tp / tc:>7.0f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
