"""Brute-force search kernels for the matching oracle.

The oracle enumerates all n! assignments of right feet to left feet and
counts those whose tube spans are pairwise disjoint-or-nested.  At the
default cap (n = 8, 40320 assignments per index, 28 span pairs each) this
is the one hot loop in the package, so it ships in two interchangeable
implementations:

* a numba ``@njit`` kernel walking permutations in lexicographic order
  with early rejection (the default), and
* a pure-numpy fallback that vectorizes the span test over a cached
  table of all permutations.

Set ``HEEGAARDTUBES_NUMBA=0`` in the environment to force the numpy
path; it is also selected automatically when numba is not importable.
Both paths return identical results (same survivor count, same first
survivor in lexicographic order); ``bench/bench_oracle.py`` compares
their throughput.
"""

from __future__ import annotations

import itertools
import os
from functools import lru_cache

import numpy as np

_ENV_FLAG = "HEEGAARDTUBES_NUMBA"

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised via reload in tests
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(func):
            return func

        return wrap


def _numba_enabled() -> bool:
    return HAS_NUMBA and os.environ.get(_ENV_FLAG, "1").lower() not in (
        "0",
        "false",
        "no",
        "off",
    )


@njit(cache=True)
def _survivors_loop(lefts, rights, modulus):  # pragma: no cover - jit body
    # lefts must be pairwise distinct: the nesting tests below shortcut
    # (modulus - off) % modulus to modulus - off, valid only for off >= 1
    n = lefts.shape[0]
    perm = np.arange(n)
    first = np.full(n, -1, dtype=np.int64)
    count = 0
    while True:
        ok = True
        for a in range(n):
            la = lefts[a]
            ca = (rights[perm[a]] - la) % modulus
            for b in range(a + 1, n):
                lb = lefts[b]
                cb = (rights[perm[b]] - lb) % modulus
                off = (lb - la) % modulus
                if off >= ca and off + cb <= modulus:
                    continue
                if off + cb <= ca:
                    continue
                if modulus - off + ca <= cb:
                    continue
                ok = False
                break
            if not ok:
                break
        if ok:
            count += 1
            if count == 1:
                first[:] = perm
        # advance to the next permutation in lexicographic order
        i = n - 2
        while i >= 0 and perm[i] >= perm[i + 1]:
            i -= 1
        if i < 0:
            break
        j = n - 1
        while perm[j] <= perm[i]:
            j -= 1
        tmp = perm[i]
        perm[i] = perm[j]
        perm[j] = tmp
        lo = i + 1
        hi = n - 1
        while lo < hi:
            tmp = perm[lo]
            perm[lo] = perm[hi]
            perm[hi] = tmp
            lo += 1
            hi -= 1
    return count, first


@lru_cache(maxsize=None)
def _permutation_table(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64)


def survivors_numpy(
    lefts: np.ndarray, rights: np.ndarray, modulus: int
) -> tuple[int, np.ndarray | None]:
    """Vectorized survivor count over the full permutation table."""
    n = int(lefts.shape[0])
    perms = _permutation_table(n)
    assigned = rights[perms]  # (n!, n) right foot per slot
    ok = np.ones(perms.shape[0], dtype=bool)
    for a in range(n):
        la = int(lefts[a])
        ca = (assigned[:, a] - la) % modulus
        for b in range(a + 1, n):
            lb = int(lefts[b])
            off = (lb - la) % modulus
            cb = (assigned[:, b] - lb) % modulus
            laminar = (
                ((off >= ca) & (off + cb <= modulus))
                | (off + cb <= ca)
                | (modulus - off + ca <= cb)
            )
            ok &= laminar
    count = int(ok.sum())
    if count == 0:
        return 0, None
    return count, perms[int(np.argmax(ok))].copy()


def survivors_numba(
    lefts: np.ndarray, rights: np.ndarray, modulus: int
) -> tuple[int, np.ndarray | None]:
    """Jit-compiled survivor count with early rejection per permutation."""
    count, first = _survivors_loop(
        np.ascontiguousarray(lefts, dtype=np.int64),
        np.ascontiguousarray(rights, dtype=np.int64),
        modulus,
    )
    if count == 0:
        return 0, None
    return int(count), first


USING_NUMBA = _numba_enabled()

noncrossing_survivors = survivors_numba if USING_NUMBA else survivors_numpy
