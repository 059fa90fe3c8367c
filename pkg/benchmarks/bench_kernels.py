#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Run:  python benchmarks/bench_kernels.py [-n REPEATS]

Times the two pointwise hot kernels on realistic field sizes, plus a full
Strang step with each backend swapped in, and prints the speedups.
"""

import argparse
import pathlib
import sys
import time

import numpy as np

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from logse import kernels  # noqa: E402
from logse.core import ComplexField, ModelParams, make_grid  # noqa: E402
from logse.kernels import pure  # noqa: E402
from logse.splitting import SplitScheme, step  # noqa: E402

try:
    from logse.kernels import _speedups
except ImportError:
    _speedups = None


def timeit(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernel(name, sizes, make_args, repeats):
    print(f"\n{name}")
    for n in sizes:
        args = make_args(n)
        t_pure = timeit(lambda: getattr(pure, name)(*args), repeats)
        line = f"  n={n:>7}: python {t_pure * 1e6:9.1f} us"
        if _speedups is not None:
            t_fast = timeit(lambda: getattr(_speedups, name)(*args), repeats)
            line += f"   compiled {t_fast * 1e6:9.1f} us   speedup {t_pure / t_fast:5.2f}x"
        print(line)


def bench_full_step(repeats):
    print("\nfull ST1 step (1000 steps, M=4096)")
    g = make_grid(-16.0, 16.0, 4096)
    p = ModelParams(-1.0, 1e-15)
    u0 = ComplexField(g, (np.pi ** -0.25 * np.exp(-g.nodes ** 2 / 2)).astype(complex))

    def run_steps():
        u = u0
        for _ in range(1000):
            u = step(u, 1e-3, SplitScheme.ST1, p)
        return u

    for label, impl in (("python", pure), ("compiled", _speedups)):
        if impl is None:
            continue
        saved = kernels.log_phase_apply
        kernels.log_phase_apply = impl.log_phase_apply
        try:
            t = timeit(run_steps, max(1, repeats // 3))
        finally:
            kernels.log_phase_apply = saved
        print(f"  {label:>8}: {t * 1e3:8.1f} ms")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("-n", "--repeats", type=int, default=7)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    print(f"active backend: {kernels.backend()}")
    if _speedups is None:
        print("compiled kernels not built; showing python timings only")

    cplx = lambda n: rng.standard_normal(n) + 1j * rng.standard_normal(n)
    bench_kernel("log_phase_apply", (4096, 65536),
                 lambda n: (cplx(n), -2e-3, 1e-15), args.repeats)
    bench_kernel("g_eps_arr", (4096, 65536),
                 lambda n: (cplx(n), cplx(n), -1.0, 1e-4), args.repeats)
    bench_kernel("F_eps_arr", (4096, 65536),
                 lambda n: (np.abs(cplx(n)) ** 2, -1.0, 1e-4), args.repeats)
    bench_full_step(args.repeats)


if __name__ == "__main__":
    main()
