#!/usr/bin/env python3
"""Benchmark the relation-kernel backends.

Compares three adjacency-derivation routes on identical seeded instances:

  scan      per-pair corner-region reference (obviously correct, O(n^3))
  python    pure-Python bitmask kernel (dponiche._kernel_py)
  compiled  Cython bitmask kernel (dponiche._kernel), if built

and then full search-style trials (derive niche graph + chordality +
asteroidal-triple check) with the compiled kernel enabled vs disabled.
"""

import argparse
import time

from dponiche import _kernel_py, kernels
from dponiche.derive import derive_all, niche_graph
from dponiche.dpo import Dpo
from dponiche.graphalg import find_asteroidal_triple, is_chordal
from dponiche.harness import GeneratorConfig, random_points

try:
    from dponiche import _kernel
except ImportError:
    _kernel = None


def bench_kernels(cfg: GeneratorConfig, trials: int) -> None:
    inputs = [random_points(cfg, i).scaled_coords() for i in range(trials)]

    def run(fn):
        start = time.perf_counter()
        for x1, x2 in inputs:
            fn(x1, x2)
        return time.perf_counter() - start

    def run_scan():
        start = time.perf_counter()
        for i in range(trials):
            derive_all(Dpo(random_points(cfg, i)), method="scan")
        return time.perf_counter() - start

    rows = [("scan (reference)", run_scan()),
            ("python kernel", run(_kernel_py.relation_rows))]
    if _kernel is not None:
        rows.append(("compiled kernel", run(_kernel.relation_rows)))
        a = _kernel.relation_rows(*inputs[0])
        b = _kernel_py.relation_rows(*inputs[0])
        assert a == b, "backends disagree"

    base = rows[0][1]
    print(f"\nrelation derivation, {trials} instances, "
          f"{cfg.min_points}..{cfg.max_points} points:")
    for name, secs in rows:
        print(f"  {name:18s} {secs:8.3f}s   x{base / secs:6.1f}")


def bench_trials(cfg: GeneratorConfig, trials: int) -> None:
    def trial_loop():
        start = time.perf_counter()
        for i in range(trials):
            graph = niche_graph(Dpo(random_points(cfg, i)))
            if is_chordal(graph):
                find_asteroidal_triple(graph)
        return time.perf_counter() - start

    saved = kernels._ext
    print(f"\nend-to-end search trials ({trials}):")
    try:
        kernels._ext = None
        pure = trial_loop()
        print(f"  python kernel      {pure:8.3f}s")
        if _kernel is not None:
            kernels._ext = _kernel
            fast = trial_loop()
            print(f"  compiled kernel    {fast:8.3f}s   x{pure / fast:6.1f}")
    finally:
        kernels._ext = saved


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--min-points", type=int, default=8)
    parser.add_argument("--max-points", type=int, default=12)
    args = parser.parse_args()

    print(f"selected backend: {kernels.BACKEND}")
    for lo, hi in ((args.min_points, args.max_points), (60, 80)):
        cfg = GeneratorConfig(seed=args.seed, min_points=lo, max_points=hi,
                              coord_max=30)
        bench_kernels(cfg, args.trials if hi <= 16 else max(args.trials // 20, 50))
    bench_trials(
        GeneratorConfig(seed=args.seed, min_points=args.min_points,
                        max_points=args.max_points),
        args.trials,
    )


if __name__ == "__main__":
    main()
