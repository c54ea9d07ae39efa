"""Time the numba kernels against the numpy fallback.

    python benchmarks/bench_backends.py [--repeat 5]

Both implementations are imported side by side, so the
COPRIME_COUNTS_BACKEND flag does not matter here. Numba compile time is
excluded by a warm-up call.
"""

import argparse
import time

import numpy as np

from coprime_counts import _kernels


def best_of(fn, repeat):
    fn()  # warm-up (JIT compile for numba)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases(rng):
    for limit in (10**4, 10**5, 10**6, 10**7):
        yield "mobius_sieve", f"limit={limit:>9,}", (limit,)
    for size, top in ((16, 10**3), (64, 10**5), (512, 10**6)):
        elems = np.sort(rng.choice(np.arange(1, top + 1), size, replace=False)).astype(np.int64)
        yield "multiple_counts", f"|A|={size:<4} sup={top:,}", (elems, top)
    for top in (10**5, 10**6):
        mu = _kernels.mobius_sieve_numpy(top)
        counts = rng.integers(0, 20, top + 1).astype(np.int64)
        yield "mobius_histogram", f"range={top:,}", (mu, counts, 1, top, 21)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    rng = np.random.default_rng(0)
    print(f"{'kernel':<18}{'case':<28}{'numpy [ms]':>12}{'numba [ms]':>12}{'speedup':>10}")
    print("-" * 80)
    for name, label, call_args in cases(rng):
        slow = getattr(_kernels, f"{name}_numpy")
        fast = getattr(_kernels, f"{name}_numba")
        np.testing.assert_array_equal(slow(*call_args), fast(*call_args))
        t_np = best_of(lambda: slow(*call_args), args.repeat)
        t_nb = best_of(lambda: fast(*call_args), args.repeat)
        print(f"{name:<18}{label:<28}{t_np * 1e3:>12.2f}{t_nb * 1e3:>12.2f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
