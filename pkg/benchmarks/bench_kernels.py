"""Flip throughput of the compiled and pure-Python kernels on the benchmark families.

    python benchmarks/bench_kernels.py [--flips N] [--repeat R]

Both kernels follow identical trajectories, so the same flips are timed on each.
"""

import argparse
import time

from wsatcc.engine import SolverParams, prepare
from wsatcc.generators import encode_open_queens, encode_vertex_cover, gen_preassignment, gen_random_graph
from wsatcc.kernel import BACKENDS
from wsatcc.oracle import min_vertex_cover
from wsatcc.strategies import Strategy


def workloads():
    g = gen_random_graph(200, 400, 1)
    k, _ = min_vertex_cover(200, g.edges)
    vc = encode_vertex_cover(g, k - 3)  # unsatisfiable: every try runs to the budget
    q = encode_open_queens(gen_preassignment(30, 6, 1))
    yield "vc V=200 VB", vc, Strategy.VB
    yield "vc V=200 DF", vc, Strategy.DF
    yield "queens n=30 VB", q, Strategy.VB
    yield "queens n=30 PF", q, Strategy.PF


def time_backend(backend, t, strategy, flips, repeat):
    ct = prepare(t, strategy)
    best = float("inf")
    done = 0
    for r in range(repeat):
        k = BACKENDS[backend](ct, 10, 100)
        k.seed(r)
        k.init_try()
        t0 = time.perf_counter()
        done = 0
        while done < flips:
            done += k.run_try(flips - done)
            if done < flips:
                k.init_try()
        best = min(best, time.perf_counter() - t0)
    return done / best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--flips", type=int, default=2_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = [b for b in ("compiled", "python") if b in BACKENDS]
    print(f"{'workload':<18}" + "".join(f"{b + ' flips/s':>20}" for b in backends) + f"{'speedup':>10}")
    for name, t, strategy in workloads():
        rates = [time_backend(b, t, strategy, args.flips, args.repeat) for b in backends]
        speed = f"{rates[0] / rates[1]:>9.1f}x" if len(rates) == 2 else ""
        print(f"{name:<18}" + "".join(f"{r:>20,.0f}" for r in rates) + speed)


if __name__ == "__main__":
    main()
