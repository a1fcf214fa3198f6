"""Hot loops with a numba implementation and a pure numpy fallback.

Set ``PERIOD_ATLAS_NO_NUMBA=1`` (before import) to force the numpy path; it is
also used when numba cannot be imported.  Both paths return identical arrays,
which the test-suite checks.

* :func:`cycle_table` -- cycle count and cycle length of every power of the
  standard ``n``-cycle, by explicit permutation traversal (no gcd anywhere).
* :func:`multiset_product` -- all tuples made of one sorted multiset per group,
  in lexicographic order; the enumeration uses it to expand residue choices.
"""

from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

_FORCE_NUMPY = os.environ.get("PERIOD_ATLAS_NO_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

try:
    if _FORCE_NUMPY:
        raise ImportError("numba disabled by PERIOD_ATLAS_NO_NUMBA")
    from numba import njit
    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

BACKEND = "numba" if HAVE_NUMBA else "numpy"


# ---------------------------------------------------------------- numpy path

def cycle_table_numpy(n: int) -> tuple[np.ndarray, np.ndarray]:
    cyc = np.roll(np.arange(n, dtype=np.int64), -1)     # x -> x+1, as a lookup table
    powers = np.empty((n, n), dtype=np.int64)
    powers[0] = np.arange(n)
    for w in range(1, n):
        powers[w] = cyc[powers[w - 1]]
    # pointer jumping: every point ends up labelled by the least point of its cycle
    label = np.broadcast_to(np.arange(n), (n, n)).copy()
    jump = powers.copy()
    steps = 1
    while steps < n:
        label = np.minimum(label, np.take_along_axis(label, jump, axis=1))
        jump = np.take_along_axis(jump, jump, axis=1)
        steps *= 2
    counts = (label == np.arange(n)).sum(axis=1)
    sizes = np.zeros((n, n), dtype=np.int64)
    np.add.at(sizes, (np.repeat(np.arange(n), n), label.ravel()), 1)
    longest = sizes.max(axis=1)
    shortest = np.where(sizes > 0, sizes, n + 1).min(axis=1)
    lengths = np.where(longest == shortest, longest, -1)
    return counts.astype(np.int64), lengths.astype(np.int64)


def _group_multisets(vals: np.ndarray, c: int) -> np.ndarray:
    if c == 0:
        return np.empty((1, 0), dtype=np.int64)
    v = len(vals)
    if v == 0:
        return np.empty((0, c), dtype=np.int64)
    idx = np.indices((v,) * c).reshape(c, -1).T
    if c > 1:
        idx = idx[np.all(np.diff(idx, axis=1) >= 0, axis=1)]
    return vals[idx]


def multiset_product_numpy(values, offsets, counts) -> np.ndarray:
    values = np.asarray(values, dtype=np.int64)
    out = np.empty((1, 0), dtype=np.int64)
    for g, c in enumerate(counts):
        block = _group_multisets(values[offsets[g]:offsets[g + 1]], int(c))
        na, nb = len(out), len(block)
        out = np.hstack([np.repeat(out, nb, axis=0), np.tile(block, (na, 1))])
    return out


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:
    @njit(cache=True)
    def _cycle_table_nb(n):
        counts = np.zeros(n, np.int64)
        lengths = np.zeros(n, np.int64)
        perm = np.arange(n)
        stamp = np.zeros(n, np.int64)
        for w in range(n):
            if w > 0:
                for x in range(n):                   # perm <- c o perm
                    y = perm[x] + 1
                    perm[x] = 0 if y == n else y
            cycles = 0
            length = 0
            uniform = True
            for start in range(n):
                if stamp[start] == w + 1:
                    continue
                size = 0
                x = start
                while stamp[x] != w + 1:
                    stamp[x] = w + 1
                    x = perm[x]
                    size += 1
                if cycles == 0:
                    length = size
                elif size != length:
                    uniform = False
                cycles += 1
            counts[w] = cycles
            lengths[w] = length if uniform else -1
        return counts, lengths

    @njit(cache=True)
    def _n_multisets(v, c):
        if c == 0:
            return 1
        if v == 0:
            return 0
        r = 1
        for i in range(1, c + 1):
            r = r * (v + i - 1) // i
        return r

    @njit(cache=True)
    def _multiset_product_nb(values, offsets, counts):
        G = counts.shape[0]
        S = 0
        for g in range(G):
            S += counts[g]
        slot_group = np.empty(S, np.int64)
        pos = 0
        total = 1
        for g in range(G):
            for _ in range(counts[g]):
                slot_group[pos] = g
                pos += 1
            total *= _n_multisets(offsets[g + 1] - offsets[g], counts[g])
        out = np.empty((total, S), np.int64)
        idx = np.zeros(S, np.int64)
        for r in range(total):
            for j in range(S):
                out[r, j] = values[offsets[slot_group[j]] + idx[j]]
            j = S - 1
            while j >= 0:
                g = slot_group[j]
                if idx[j] + 1 < offsets[g + 1] - offsets[g]:
                    idx[j] += 1
                    for t in range(j + 1, S):
                        idx[t] = idx[j] if slot_group[t] == g else 0
                    break
                j -= 1
        return out

    def cycle_table_numba(n: int):
        return _cycle_table_nb(n)

    def multiset_product_numba(values, offsets, counts) -> np.ndarray:
        return _multiset_product_nb(np.asarray(values, dtype=np.int64),
                                    np.asarray(offsets, dtype=np.int64),
                                    np.asarray(counts, dtype=np.int64))
else:
    cycle_table_numba = None
    multiset_product_numba = None


# ---------------------------------------------------------------- dispatch

@lru_cache(maxsize=None)
def cycle_table(n: int) -> tuple[np.ndarray, np.ndarray]:
    """``(counts, lengths)``: cycles of ``c**w`` for ``w = 0..n-1``, ``c`` the ``n``-cycle.

    ``lengths[w]`` is the common cycle length, or ``-1`` if the cycles differ in
    length (never happens for powers of a cycle; the oracle treats it as a bug).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    fn = cycle_table_numba if HAVE_NUMBA else cycle_table_numpy
    counts, lengths = fn(n)
    counts.setflags(write=False)
    lengths.setflags(write=False)
    return counts, lengths


def multiset_product(values, offsets, counts) -> np.ndarray:
    """Rows are concatenations of one nondecreasing ``counts[g]``-tuple per group.

    Group ``g`` draws from ``values[offsets[g]:offsets[g+1]]`` (assumed sorted).
    Rows come in lexicographic order of the chosen indices, first group slowest.
    """
    if HAVE_NUMBA:
        return multiset_product_numba(values, offsets, counts)
    return multiset_product_numpy(values, offsets, counts)
