"""Time the numba kernels against their numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 5]

The first numba call (compilation, or loading the on-disk cache) is timed
separately and excluded from the steady-state numbers.
"""

import argparse
import time

import numpy as np

from period_atlas import _kernels as K


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not K.HAVE_NUMBA:
        print("numba unavailable (or PERIOD_ATLAS_NO_NUMBA set); only the numpy path can run")

    vals = np.arange(1, 40, dtype=np.int64)
    cases = [
        ("cycle_table n=128", lambda f: f(128), K.cycle_table_numpy, K.cycle_table_numba),
        ("cycle_table n=512", lambda f: f(512), K.cycle_table_numpy, K.cycle_table_numba),
        ("multiset_product 3x13 + 1x39",
         lambda f: f(vals, [0, 13, 39], [3, 1]), K.multiset_product_numpy, K.multiset_product_numba),
        ("multiset_product 4x20",
         lambda f: f(vals, [0, 20], [4]), K.multiset_product_numpy, K.multiset_product_numba),
    ]
    print(f"{'kernel':<32}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}{'first call ms':>15}")
    for name, call, np_fn, nb_fn in cases:
        t_np = best_of(lambda: call(np_fn), args.repeat)
        if nb_fn is None:
            print(f"{name:<32}{t_np * 1e3:>12.2f}{'-':>12}{'-':>10}{'-':>15}")
            continue
        t0 = time.perf_counter()
        call(nb_fn)
        first = time.perf_counter() - t0
        t_nb = best_of(lambda: call(nb_fn), args.repeat)
        print(f"{name:<32}{t_np * 1e3:>12.2f}{t_nb * 1e3:>12.2f}{t_np / t_nb:>9.1f}x{first * 1e3:>15.1f}")


if __name__ == "__main__":
    main()
