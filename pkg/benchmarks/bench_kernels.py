"""Benchmark: numba kernel vs pure-numpy fallback on the counting DP.

The invariant-monomial series is the hot inner loop of every sweep, so
this script times it directly on sweep-realistic sizes and then times a
small end-to-end rigidity sweep under each backend.

Run:  python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from orbilens import _kernels
from orbilens.search import verify_rigidity


def time_call(fn, *args, repeats=5):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def series_cases():
    # (q, rotations, depth): depth = 4q + 2 is the isospectrality bound
    for q, rots in [(60, (7, 24)), (195, (3, 5)), (500, (9, 125))]:
        weights = []
        for p in rots:
            weights.extend([p % q, (q - p) % q])
        yield q, np.asarray(weights, np.int64), 4 * q + 2


def main():
    print(f"numba available: {_kernels.NUMBA_AVAILABLE}")
    print(f"active backend:  {_kernels.active_backend()}")
    print()

    backends = ["numpy"]
    if _kernels.NUMBA_AVAILABLE:
        backends.insert(0, "numba")
        # warm up the jit compilation outside the timed region
        _kernels._series_numba(np.asarray([1, 4], np.int64), 5, 32)

    print("invariant-series kernel (best of 5)")
    print(f"{'case':>24} " + " ".join(f"{b:>12}" for b in backends) + f" {'speedup':>9}")
    for q, weights, depth in series_cases():
        times = {}
        ref = None
        for backend in backends:
            fn = (
                _kernels._series_numba
                if backend == "numba"
                else _kernels._series_numpy
            )
            times[backend], out = time_call(fn, weights, q, depth)
            if ref is None:
                ref = out
            else:
                assert np.array_equal(ref, out), "backends disagree"
        label = f"q={q} depth={depth}"
        row = " ".join(f"{times[b] * 1e3:>10.2f}ms" for b in backends)
        if len(backends) == 2:
            row += f" {times['numpy'] / times['numba']:>8.1f}x"
        print(f"{label:>24} {row}")

    print()
    print("end-to-end rigidity sweep 8..40 (single run, cold caches)")
    initial = _kernels.active_backend()
    try:
        for backend in backends:
            _kernels.set_backend(backend)
            from orbilens.spectrum import _invariant_counts

            _invariant_counts.cache_clear()
            t0 = time.perf_counter()
            summary = verify_rigidity(8, 40)
            dt = time.perf_counter() - t0
            print(
                f"{backend:>8}: {dt * 1e3:8.1f}ms  "
                f"({summary.classes} classes, {summary.pairs_checked} pairs, "
                f"{len(summary.findings)} findings)"
            )
    finally:
        _kernels.set_backend(initial)


if __name__ == "__main__":
    main()
