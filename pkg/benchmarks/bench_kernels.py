"""Benchmark the compiled kernels against the pure-Python reference.

Times the raw kernel functions on identical inputs, then (with --suite)
spawns two subprocesses running a small identity suite end to end, one
with WEAKCOMM_PURE=1 and one without.

Usage: python benchmarks/bench_kernels.py [--repeat 5] [--suite]
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time

from weakcomm import _kernel_cy, _kernel_py


def _random_rep(rng, d, lo=-50, hi=50, den_hi=60, complex_frac=0.2):
    n = d * d
    re = [rng.randint(lo, hi) for _ in range(n)]
    im = [
        rng.randint(lo, hi) if rng.random() < complex_frac else 0 for _ in range(n)
    ]
    return _kernel_py.normalize(rng.randint(1, den_hi), re, im)


def _time(fn, args_list, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for args in args_list:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels(repeat):
    rng = random.Random(12345)
    rows = []
    for d in (3, 4, 6, 8):
        pairs = [
            (d, _random_rep(rng, d), _random_rep(rng, d)) for _ in range(400)
        ]
        for name, fn_py, fn_cy in (
            ("mat_mul", _kernel_py.mat_mul, _kernel_cy.mat_mul),
            ("mat_add", _kernel_py.mat_add, _kernel_cy.mat_add),
        ):
            t_py = _time(fn_py, pairs, repeat)
            t_cy = _time(fn_cy, pairs, repeat)
            rows.append((f"{name} d={d}", t_py, t_cy))
        mats = [(d, list(rep[1]), list(rep[2])) for _, rep, _ in pairs[:100]]
        t_py = _time(_kernel_py.charpoly_ints, mats, repeat)
        t_cy = _time(_kernel_cy.charpoly_ints, mats, repeat)
        rows.append((f"charpoly d={d}", t_py, t_cy))
        pows = [(d, rep, 6) for _, rep, _ in pairs[:100]]
        t_py = _time(_kernel_py.mat_pow, pows, repeat)
        t_cy = _time(_kernel_cy.mat_pow, pows, repeat)
        rows.append((f"mat_pow^6 d={d}", t_py, t_cy))
    print(f"{'workload':<18} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for name, t_py, t_cy in rows:
        print(f"{name:<18} {t_py:>10.4f} {t_cy:>13.4f} {t_py / t_cy:>7.1f}x")


def bench_suite():
    code = (
        "import time; from weakcomm.identities import verify_suite; "
        "from weakcomm._backend import BACKEND; t0=time.time(); "
        "r=verify_suite(dims=(2,3,4), samples_per_class=60, seed=7); "
        "print(f'{BACKEND}: {time.time()-t0:.2f}s fail={r.totals[\"fail\"]}')"
    )
    for env_extra in ({"WEAKCOMM_PURE": "1"}, {}):
        env = dict(os.environ)
        env.pop("WEAKCOMM_PURE", None)
        env.update(env_extra)
        subprocess.run([sys.executable, "-c", code], env=env, check=True)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--suite", action="store_true", help="also time a small end-to-end suite")
    args = parser.parse_args()
    bench_kernels(args.repeat)
    if args.suite:
        print()
        bench_suite()


if __name__ == "__main__":
    main()
