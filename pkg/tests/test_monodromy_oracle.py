from math import gcd

from hypothesis import given
import pytest

from conftest import valid_or
from period_atlas import monodromy_oracle as mo
from period_atlas.data_model import OpData, OrData, PreData, Residue
from period_atlas.errors import NotRealizable, ValidatorMismatch
from period_atlas.or_maps import genus_or, predata_of


def test_cycle_count_examples():
    assert mo.cycle_count(4, 10) == (2, 5)
    assert mo.cycle_count(0, 10) == (10, 1)
    assert mo.cycle_count(7, 12) == (1, 12)
    assert mo.cycle_count(Residue(-3, 12)) == (3, 4)


def test_cycle_count_exhaustive_up_to_512():
    for n in range(1, 513):
        for w in range(n):
            t = gcd(w, n)
            assert mo.cycle_count(w, n) == (t, n // t)


def test_oracle_genus_examples():
    d1 = OrData(0, 16, [8], [], [3, 1])
    assert predata_of(d1) == PreData(0, 8, [4], [3, 1])
    assert mo.oracle_euler(predata_of(d1)) == 2
    assert mo.oracle_genus(predata_of(d1)) == 2
    assert mo.oracle_genus_or(d1) == 5
    assert mo.oracle_genus(OpData(0, 5, [1, 1, 3])) == 2
    assert mo.oracle_genus(PreData(1, 1)) == 1


def test_oracle_rejects_invalid_input():
    with pytest.raises(NotRealizable):
        mo.oracle_genus(OpData(0, 6, [1, 2]))
    with pytest.raises(NotRealizable):
        mo.oracle_genus_or(OrData(0, 16, [8], [], [2, 1]))


def test_mismatch_is_reported(monkeypatch):
    monkeypatch.setattr(mo, "genus_or", lambda d: genus_or(d) + 1)
    with pytest.raises(ValidatorMismatch):
        mo.oracle_genus_or(OrData(0, 16, [8], [], [3, 1]))
    assert mo.oracle_genus_or(OrData(0, 16, [8], [], [3, 1]), check=False) == 5


@given(valid_or(max_m=32))
def test_oracle_agrees_on_random_data(d):
    assert mo.oracle_genus_or(d) == genus_or(d)
    mo.oracle_genus(predata_of(d))
