"""Benchmark the matching-oracle kernels: numba @njit vs pure numpy.

Both implementations search all n! right-foot assignments of random
indices for the unique non-crossing matching.  Run as

    python bench/bench_oracle.py --n 7 --n 8 --indices 200

The numpy path can also be forced package-wide with
HEEGAARDTUBES_NUMBA=0; this script always times both directly.
"""

import argparse
import random
import time

import numpy as np

from heegaardtubes._kernels import HAS_NUMBA, survivors_numba, survivors_numpy


def sample_indices(n, count, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        members = sorted(rng.sample(range(1, 2 * n + 1), n))
        lefts = np.array(members, dtype=np.int64)
        rights = np.array(
            [v for v in range(1, 2 * n + 1) if v not in members], dtype=np.int64
        )
        out.append((lefts, rights))
    return out


def time_impl(impl, batches, modulus):
    started = time.perf_counter()
    for lefts, rights in batches:
        count, _ = impl(lefts, rights, modulus)
        assert count == 1
    return time.perf_counter() - started


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, action="append",
                        help="bridge number(s) to benchmark (default: 6 7 8)")
    parser.add_argument("--indices", type=int, default=200,
                        help="random indices per bridge number (default 200)")
    parser.add_argument("--seed", type=int, default=2718)
    args = parser.parse_args()
    sizes = args.n or [6, 7, 8]

    if not HAS_NUMBA:
        print("numba is not importable; timing the numpy path only")
    else:
        # trigger jit compilation outside the timed region
        warm = sample_indices(min(sizes), 1, args.seed)[0]
        survivors_numba(warm[0], warm[1], 2 * min(sizes))

    print(f"{'n':>3} {'indices':>8} {'numpy [s]':>10} {'numba [s]':>10} {'speedup':>8}")
    for n in sizes:
        batches = sample_indices(n, args.indices, args.seed + n)
        numpy_time = time_impl(survivors_numpy, batches, 2 * n)
        if HAS_NUMBA:
            numba_time = time_impl(survivors_numba, batches, 2 * n)
            speedup = numpy_time / numba_time if numba_time else float("inf")
            print(f"{n:>3} {args.indices:>8} {numpy_time:>10.3f} {numba_time:>10.3f} {speedup:>7.1f}x")
        else:
            print(f"{n:>3} {args.indices:>8} {numpy_time:>10.3f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
