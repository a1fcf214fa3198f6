import os
import subprocess
import sys
from math import comb, gcd

from hypothesis import given, strategies as st
import numpy as np
import pytest

from period_atlas import _kernels as K

needs_numba = pytest.mark.skipif(not K.HAVE_NUMBA, reason="numba backend unavailable")


def test_cycle_table_numpy_matches_gcd():
    for n in range(1, 70):
        counts, lengths = K.cycle_table_numpy(n)
        assert counts.tolist() == [gcd(w, n) for w in range(n)]
        assert lengths.tolist() == [n // gcd(w, n) for w in range(n)]


@needs_numba
def test_cycle_table_backends_agree():
    for n in list(range(1, 70)) + [128, 257]:
        a, b = K.cycle_table_numba(n), K.cycle_table_numpy(n)
        assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])


def test_cycle_table_is_cached_and_read_only():
    counts, _ = K.cycle_table(12)
    assert K.cycle_table(12)[0] is counts
    with pytest.raises(ValueError):
        counts[0] = 5


groups = st.lists(st.tuples(st.lists(st.integers(-20, 60), max_size=6, unique=True).map(sorted),
                            st.integers(0, 3)), max_size=4)


@given(groups)
def test_multiset_product_numpy_against_itertools(layout):
    from itertools import combinations_with_replacement, product

    values, offsets, counts = [], [0], []
    for vals, c in layout:
        values += vals
        offsets.append(len(values))
        counts.append(c)
    got = K.multiset_product_numpy(np.array(values, dtype=np.int64), offsets, counts)
    expected = [sum(rows, ()) for rows in product(*[list(combinations_with_replacement(v, c))
                                                   for v, c in layout])]
    assert got.shape[0] == len(expected)
    assert [tuple(r) for r in got.tolist()] == expected
    total = 1
    for vals, c in layout:
        total *= comb(len(vals) + c - 1, c) if c else 1
    assert got.shape[0] == total


@needs_numba
@given(groups)
def test_multiset_product_backends_agree(layout):
    values, offsets, counts = [], [0], []
    for vals, c in layout:
        values += vals
        offsets.append(len(values))
        counts.append(c)
    arr = np.array(values, dtype=np.int64)
    a = K.multiset_product_numba(arr, offsets, counts)
    b = K.multiset_product_numpy(arr, offsets, counts)
    assert a.shape == b.shape and np.array_equal(a, b)


def test_env_flag_selects_numpy():
    env = dict(os.environ, PERIOD_ATLAS_NO_NUMBA="1")
    out = subprocess.run([sys.executable, "-c",
                          "import period_atlas._kernels as K; print(K.BACKEND, K.cycle_table(6)[0].tolist())"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split(None, 1) == ["numpy", "[6, 1, 2, 3, 2, 1]\n"]
