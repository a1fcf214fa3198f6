from itertools import combinations_with_replacement as cwr
from math import gcd

import pytest

from period_atlas import large_period as lp
from period_atlas.data_model import OrData, PreData
from period_atlas.equivalence import canon_or
from period_atlas.errors import BudgetExceeded, TableMismatch
from period_atlas.monodromy_oracle import oracle_genus_or
from period_atlas.op_maps import genus_op, validate_op
from period_atlas.or_maps import Quotient, genus_or, lift_predata, power_or, validate_or


def brute_force_keys(g, n, max_len=5, max_h=2):
    """Canonical keys of every valid datum of genus g and period n with small shape, by exhaustion."""
    m = n // 2
    branch_vals = range(2, n, 2)
    boundary_vals = range(0, n, 2)
    odd_vals = range(1, n, 2)
    keys = set()
    for h in range(max_h + 1):
        for s in range(0, 4):
            for k in range(0, max_len - s + 1):
                if k + s == 0:
                    continue
                base = m * (2 * h - 2 + k + s)
                if base > g - 1:
                    continue
                for b in range(0, max_len - s - k + 1):
                    for th in cwr(branch_vals, b):
                        if base + sum(m - gcd(t // 2, m) for t in th) != g - 1:
                            continue
                        for et in cwr(boundary_vals, k):
                            for ze in cwr(odd_vals, s):
                                if (sum(th) // 2 + sum(et) // 2 + sum(ze)) % m:
                                    continue
                                d = OrData(h, n, th, et, ze)
                                rep = validate_or(d)
                                if rep.valid:
                                    assert rep.genus == g
                                    keys.add(canon_or(d))
    return keys


@pytest.mark.parametrize("g", [0, 1, 2, 3])
def test_enumeration_matches_exhaustive_search(g):
    for n in range(2, 11, 2):
        got = {r.key for r in lp.enumerate_classes(g, n)}
        assert got == brute_force_keys(g, n), (g, n)


def test_enumeration_examples():
    pres = [r.pre for r in lp.enumerate_classes(2, 12)]
    assert any(p.h == 0 and p.m == 6 and sorted(p.thetas) == [2, 3] and list(p.etas) == [1] for p in pres)

    d1 = OrData(0, 16, [8], [], [3, 1])
    assert {r.key for r in lp.enumerate_classes(5, 16)} == lp.power_keys(d1)

    sphere = lp.enumerate_classes(0, 2)
    assert {r.quotient for r in sphere} == {Quotient(False, 1, 0), Quotient(True, 0, 1)}
    assert len(sphere) == 2


def test_max_period_examples():
    assert [lp.max_period(g) for g in (2, 4, 5)] == [12, 20, 16]
    with pytest.raises(ValueError):
        lp.max_period(1)


@pytest.mark.parametrize("g", [2, 3, 4, 5])
def test_records_are_consistent(g):
    records = lp.classes_in_range(g, 2)
    assert len({r.key for r in records}) == len(records)
    for r in records:
        rep = validate_or(r.representative)
        assert rep.valid and rep.genus == g == oracle_genus_or(r.representative)
        assert canon_or(r.representative) == r.key
        assert r.n == r.representative.n and r.pre.m == r.n // 2


@pytest.mark.parametrize("g,n", [(3, 8), (4, 12), (5, 16), (6, 14), (7, 24)])
def test_key_set_closed_under_powers(g, n):
    keys = {r.key for r in lp.enumerate_classes(g, n)}
    for r in lp.enumerate_classes(g, n):
        assert lp.power_keys(r.representative) <= keys


@pytest.mark.parametrize("g", range(2, 8))
def test_large_period_shape(g):
    for row in lp.large_period_survey(g):
        rec = row.record
        assert row.quotient_ok and row.hbc_ok
        if 1 in rec.y_list:
            assert rec.pre.m % 2 == 1
            assert lp.match_record(rec, "t0").ok


def test_survey_example_g4():
    pre = PreData(0, 6, [1, 2], [3])
    lifts = [d for d in lift_predata(pre) if validate_or(d).valid]
    assert lifts and all(genus_or(d) == 4 for d in lifts)
    keys = {r.record.key: r for r in lp.large_period_survey(4)}
    for d in lifts:
        row = keys[canon_or(d)]
        assert row.record.quotient == Quotient(False, 1, 0)
        assert row.quotient_ok and row.hbc_ok


def test_survey_strict_raises(monkeypatch):
    monkeypatch.setattr(lp, "ALLOWED_HBC", frozenset())
    with pytest.raises(TableMismatch):
        lp.large_period_survey(3)
    assert not any(r.hbc_ok for r in lp.large_period_survey(3, strict=False))


def test_table_examples():
    def rows_for(g, n, table=None):
        return {lbl for r in lp.enumerate_classes(g, n) for lbl in lp.match_record(r, table).rows}

    assert "row 1" in rows_for(6, 28)
    assert "row 13" in rows_for(8, 24)
    at_3g = {r.n for r in lp.classes_in_range(5, 15)}
    assert at_3g == {16}
    assert "row 3" in rows_for(5, 16)


def test_verify_table_small():
    report = lp.verify_table_3g({2, 3, 4})
    assert report.ok and report.checks


@pytest.mark.parametrize("name", ["t0", "bc2", "bc4", "4g-4"])
def test_check_table(name):
    report = lp.check_table(name, 7)
    assert report.ok, [str(c.record.representative) for c in report.mismatches] + report.notes


def test_four_g_minus_four_lifts():
    for g in (5, 7, 9):
        ds = lp.four_g_minus_four_data(g)
        assert all(genus_or(d) == g for d in ds)
        assert len({canon_or(d) for d in ds}) <= 4
        assert {canon_or(d) for d in ds} <= lp.power_keys(ds[0])
    with pytest.raises(ValueError):
        lp.four_g_minus_four_data(4)


def test_hirose_examples():
    r1 = [r for r in lp.hirose_rows(2) if r.index == 1][0]
    assert sorted(r1.op_data().thetas, reverse=True) == [5, 4, 1]
    assert genus_op(r1.op_data()) == 2
    r7 = [r for r in lp.hirose_rows(4) if r.index == 7][0]
    assert sorted(r7.op_data().thetas, reverse=True) == [9, 2, 1]
    assert {r.index for r in lp.hirose_rows(5)} == {1, 2, 6}


@pytest.mark.parametrize("tau", range(1, 31))
def test_hirose_rows_are_valid(tau):
    for row in lp.hirose_rows(tau):
        assert list(row.Q) == sorted(row.Q)
        assert all(gcd(u, q) == 1 for q, u in zip(row.Q, row.U))
        assert validate_op(row.op_data()).valid
        assert genus_op(row.op_data()) == tau


def test_budget_and_limits(monkeypatch):
    with pytest.raises(BudgetExceeded):
        lp.enumerate_classes(9, 36, budget=3)
    with pytest.raises(BudgetExceeded):
        lp.enumerate_classes(300, 2 * (lp.MAX_M + 1))
    monkeypatch.setenv("PERIOD_ATLAS_NODE_BUDGET", "2")
    assert lp.node_budget() == 2
    with pytest.raises(BudgetExceeded):
        lp.enumerate_classes(9, 32)
    for bad in ((-1, 4), (3, 7), (3, 0)):
        with pytest.raises(ValueError):
            lp.enumerate_classes(*bad)


def test_power_of_record_stays_in_class_set():
    d = lp.enumerate_classes(4, 20)[0].representative
    assert canon_or(power_or(d, 3)) in {r.key for r in lp.enumerate_classes(4, 20)}
