"""Benchmark the numba kernels against the pure-numpy fallbacks.

Run: python benchmarks/bench_kernels.py

Covers the two hot kernels (prime-field rank, batched divisibility) on
synthetic matrices of realistic sizes, plus one end-to-end Betti-table
workload.  Setting POLYSHIFT_PURE_NUMPY=1 forces the numpy path at import
time; this script instead calls both implementations directly so a single
run compares them.
"""

from __future__ import annotations

import time

import numpy as np

from polyshift import _kernels
from polyshift.families import VeroneseSpec, realize
from polyshift.oracle import betti_table


def _time(fn, *args, repeat: int = 5) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_rank(p: int = 32003) -> None:
    print("rank_mod_p (best of 5, seconds)")
    rng = np.random.default_rng(7)
    for size in (8, 32, 128, 256):
        a = rng.integers(0, p, size=(size, size), dtype=np.int64)
        numpy_t = _time(lambda m: _kernels._rank_mod_p_numpy(m.copy(), p), a)
        line = f"  {size:4d}x{size:<4d} numpy {numpy_t:9.6f}"
        if _kernels.HAVE_NUMBA:
            _kernels._rank_impl(a.copy(), np.int64(p))  # warm the JIT
            numba_t = _time(lambda m: _kernels._rank_impl(m.copy(), np.int64(p)), a)
            line += f"   numba {numba_t:9.6f}   speedup {numpy_t / numba_t:6.2f}x"
        print(line)


def bench_contains() -> None:
    print("contains_mask (best of 5, seconds)")
    rng = np.random.default_rng(11)
    for m, f, n in ((20, 32, 5), (120, 64, 5), (200, 1024, 10)):
        gens = rng.integers(0, 4, size=(m, n), dtype=np.int64)
        targets = rng.integers(0, 6, size=(f, n), dtype=np.int64)
        numpy_t = _time(_kernels._contains_mask_numpy, gens, targets)
        line = f"  m={m:<4d} f={f:<5d} numpy {numpy_t:9.6f}"
        if _kernels.HAVE_NUMBA:
            _kernels._contains_impl(gens, targets)
            numba_t = _time(_kernels._contains_impl, gens, targets)
            line += f"   numba {numba_t:9.6f}   speedup {numpy_t / numba_t:6.2f}x"
        print(line)


def bench_betti_workload() -> None:
    print("end-to-end betti_table on the degree-4 Veronese ideal in 5 variables")
    ideal = realize(VeroneseSpec((4, 4, 4, 4, 4), 4))

    def run():
        betti_table(ideal)

    saved_rank, saved_contains = _kernels._rank_impl, _kernels._contains_impl
    try:
        _kernels._rank_impl = _kernels._rank_mod_p_numpy
        _kernels._contains_impl = _kernels._contains_mask_numpy
        numpy_t = _time(run, repeat=3)
        print(f"  numpy path {numpy_t:9.4f}")
        if _kernels.HAVE_NUMBA:
            _kernels._rank_impl, _kernels._contains_impl = saved_rank, saved_contains
            run()  # warm
            numba_t = _time(run, repeat=3)
            print(f"  numba path {numba_t:9.4f}   speedup {numpy_t / numba_t:6.2f}x")
    finally:
        _kernels._rank_impl, _kernels._contains_impl = saved_rank, saved_contains


def main() -> None:
    print(f"numba available: {_kernels.HAVE_NUMBA}")
    if not _kernels.HAVE_NUMBA:
        print("(install the 'speed' extra or unset POLYSHIFT_PURE_NUMPY to compare)")
    bench_rank()
    bench_contains()
    bench_betti_workload()


if __name__ == "__main__":
    main()
