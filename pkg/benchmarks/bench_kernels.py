"""Benchmark the compiled kernels against the NumPy fallback.

Usage: python benchmarks/bench_kernels.py [--repeat 5]

Covers the hot paths: truncated Cauchy products, series composition,
long division, and the RK4 Loewner stepper.  Also cross-checks that the
backends agree on every workload before timing them.
"""

import argparse
import time

import numpy as np

from schlicht._kernels import backends


def _workloads():
    rng = np.random.default_rng(0)
    n = 64
    a = rng.normal(size=n) + 1j * rng.normal(size=n)
    b = rng.normal(size=n) + 1j * rng.normal(size=n)
    b[0] = 1.0
    inner = a * 0.2
    inner[0] = 0.0
    z0 = 0.8 * np.exp(2j * np.pi * np.arange(64) / 64) * 0.9
    kappa = np.full(4000, -1.0 + 0j)
    return [
        ("cauchy_mul(64) x200", lambda k: [k.cauchy_mul(a, b) for _ in range(200)]),
        ("cauchy_div(64) x200", lambda k: [k.cauchy_div(a, b) for _ in range(200)]),
        ("compose(64) x20", lambda k: [k.compose(b, inner) for _ in range(20)]),
        ("rk4 64pts 4000 steps", lambda k: k.rk4_loewner(z0, kappa, 1e-3, 4000, False)),
        ("rk4 + derivative", lambda k: k.rk4_loewner(z0, kappa, 1e-3, 4000, True)),
    ]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    impls = backends()
    names = [i.BACKEND for i in impls]
    print(f"backends available: {', '.join(names)}")
    if len(impls) < 2:
        print("(compiled extension not built; timing the fallback only)")

    # agreement check first
    rng = np.random.default_rng(1)
    a = rng.normal(size=32) + 1j * rng.normal(size=32)
    b = a[::-1].copy()
    b[0] = 1.0
    ref = impls[0].cauchy_mul(a, b)
    for impl in impls[1:]:
        assert np.allclose(impl.cauchy_mul(a, b), ref), "backend mismatch"

    rows = []
    for label, work in _workloads():
        timings = []
        for impl in impls:
            best = min(
                _time_once(work, impl) for _ in range(args.repeat)
            )
            timings.append(best)
        rows.append((label, timings))

    width = max(len(r[0]) for r in rows) + 2
    header = "workload".ljust(width) + "".join(f"{n:>14}" for n in names)
    if len(impls) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, timings in rows:
        line = label.ljust(width) + "".join(f"{t * 1e3:>11.2f} ms" for t in timings)
        if len(timings) == 2:
            line += f"{timings[0] / timings[1]:>9.1f}x" if timings[1] < timings[0] else f"{timings[1] / timings[0]:>8.1f}x*"
        print(line)
    if len(impls) == 2:
        print("(* fallback faster; speedup column is compiled over numpy otherwise)")


def _time_once(work, impl):
    t0 = time.perf_counter()
    work(impl)
    return time.perf_counter() - t0


if __name__ == "__main__":
    main()
