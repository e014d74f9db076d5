"""Timing comparison of the numpy and numba simulation backends.

Runs the same scenario through both backends (selected via INVLINDLEY_JIT),
reports per-pass wall time, and cross-checks that the estimate tables agree.
The first numba pass includes JIT compilation, so a throwaway warm-up pass
runs before timing.

Usage:
    python3 benchmarks/backend_bench.py --reps 2000 --repeat 3
"""

import argparse
import os
import time

import numpy as np


def run_backend(cfg, flag, repeat):
    from invlindley.simulation import estimate_rows

    os.environ["INVLINDLEY_JIT"] = flag
    rows = estimate_rows(cfg)  # warm-up; compiles when flag enables the JIT
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        rows = estimate_rows(cfg)
        times.append(time.perf_counter() - t0)
    return rows, times


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--theta1", type=float, default=1.0)
    ap.add_argument("--theta2", type=float, default=2.0)
    ap.add_argument("--n", type=int, default=50)
    ap.add_argument("--m", type=int, default=50)
    ap.add_argument("--reps", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=20260822)
    ap.add_argument("--repeat", type=int, default=3,
                    help="timed passes per backend after warm-up")
    args = ap.parse_args(argv)

    from invlindley._jit import numba_available
    from invlindley.simulation import ScenarioConfig

    cfg = ScenarioConfig(theta1=args.theta1, theta2=args.theta2,
                         n=args.n, m=args.m,
                         replications=args.reps, seed=args.seed)
    saved = os.environ.get("INVLINDLEY_JIT")
    try:
        rows_np, t_np = run_backend(cfg, "0", args.repeat)
        print("scenario: theta=(%g, %g), n=%d, m=%d, %d replications"
              % (args.theta1, args.theta2, args.n, args.m, args.reps))
        print("%-10s %12s %12s" % ("backend", "best (s)", "mean (s)"))
        print("%-10s %12.4f %12.4f" % ("numpy", min(t_np), np.mean(t_np)))
        if numba_available():
            t0 = time.perf_counter()
            rows_nb, t_nb = run_backend(cfg, "1", args.repeat)
            compile_s = time.perf_counter() - t0 - sum(t_nb)
            print("%-10s %12.4f %12.4f   (first-call compile %.2fs)"
                  % ("numba", min(t_nb), np.mean(t_nb), compile_s))
            print("speedup: %.2fx (best over best)" % (min(t_np) / min(t_nb)))
            diff = np.nanmax(np.abs(rows_nb - rows_np)
                             / np.maximum(1.0, np.abs(rows_np)))
            print("max relative difference between backends: %.3g" % diff)
            if diff > 1e-12:
                raise SystemExit("backend disagreement above 1e-12")
        else:
            print("numba unavailable: numpy backend only")
    finally:
        if saved is None:
            os.environ.pop("INVLINDLEY_JIT", None)
        else:
            os.environ["INVLINDLEY_JIT"] = saved
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
