"""Exhaustive enumeration of orientation reversing classes and the large-period tables.

Search space for genus ``g`` and period ``n = 2m``.  Every class has a
representative with at most two one-sided values (merge three of them into a
handle), so only ``s <= 2`` is searched.  With ``base = 2h - 2 + k + s`` the
genus condition reads ``g - 1 - m*base = sum(m - t_i)`` where ``t_i`` is the
gcd of ``theta_i`` with ``m``, a proper divisor of ``m``.  Each term is at least
``m/2``, which bounds ``h``, ``k``, ``s`` and ``b``.  The search then

1. picks a multiset of proper divisors ``t_i`` meeting the genus condition,
2. expands every ``theta_i`` over the residues with ``gcd(theta_i, m) = t_i``,
3. solves the last boundary or one-sided value from the sum condition,

and keeps what :func:`validate_or` accepts, deduplicated by canonical key.  When
``s > 0`` the move that flips a branch or boundary value is used up front:
only ``theta <= m - theta`` and ``eta <= m - eta`` are tried.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from math import comb, gcd
from typing import NamedTuple

import numpy as np

from .data_model import OpData, OrData, PreData
from .equivalence import CanonKey, canon_or, eq_or
from .errors import BudgetExceeded, NotLiftable, NotRealizable, TableMismatch
from .op_maps import genus_op, validate_op
from .or_maps import (Quotient, lift_predata, multiplicities, odd_units, power_or,
                      predata_of, quotient_of, validate_or)
from ._kernels import multiset_product

MAX_M = 512
DEFAULT_NODE_BUDGET = 5_000_000


def node_budget() -> int:
    raw = os.environ.get("PERIOD_ATLAS_NODE_BUDGET")
    return int(raw) if raw else DEFAULT_NODE_BUDGET


@dataclass(frozen=True)
class ClassRecord:
    key: CanonKey
    representative: OrData
    g: int
    n: int
    pre: PreData
    quotient: Quotient
    x_list: tuple
    y_list: tuple

    @classmethod
    def from_key(cls, key: CanonKey, g: int) -> "ClassRecord":
        rep = key.data()
        pre = predata_of(rep)
        xs, ys = multiplicities(pre)
        return cls(key, rep, g, rep.n, pre, quotient_of(rep), tuple(xs), tuple(ys))

    @property
    def bc(self) -> tuple[int, int, int]:
        """``(h, b, c)`` of the pre-data."""
        return self.pre.h, self.pre.b, self.pre.c

    def as_dict(self) -> dict:
        return {"g": self.g, "n": self.n, "data": str(self.representative),
                "pre": str(self.pre), "quotient": str(self.quotient),
                "x": list(self.x_list), "y": list(self.y_list)}


# ---------------------------------------------------------------- enumeration

def _proper_divisors(m: int) -> list[int]:
    return [t for t in range(1, m) if m % t == 0]


def _divisor_multisets(divs, b, total, m, start=0):
    """Nondecreasing ``b``-tuples from ``divs[start:]`` with ``sum(m - t) == total``."""
    if b == 0:
        if total == 0:
            yield ()
        return
    for i in range(start, len(divs)):
        t = divs[i]
        term = m - t
        # terms only shrink from here on (divisors increase), so bail early
        if term * b < total:
            break
        if term > total:
            continue
        for rest in _divisor_multisets(divs, b - 1, total - term, m, i):
            yield (t,) + rest


def _shapes(g: int, m: int):
    """``(h, k, s, T)`` with ``T = g - 1 - m*base >= 0``, ``s <= 2``, ``k + s > 0``."""
    h = 0
    while m * (2 * h - 1) <= g - 1:
        for s in range(3):
            k = 0
            while True:
                if k + s > 0:
                    T = g - 1 - m * (2 * h - 2 + k + s)
                    if T < 0:
                        break
                    yield h, k, s, T
                if m % 2 == 0:
                    break
                k += 1
        h += 1


def _groups(m, h, k, s, divisors):
    """Candidate lists for each free slot group, plus the kind of the solved slot."""
    half = s > 0
    groups = []
    for t in sorted(set(divisors)):
        vals = [x for x in range(1, m) if gcd(x, m) == t and (not half or x <= m - x)]
        groups.append(("theta", vals, divisors.count(t)))
    free_k = k if s > 0 else k - 1
    groups.append(("eta", [x for x in range(m) if not half or x <= m - x], free_k))
    groups.append(("zeta", list(range(1, 2 * m, 2)), max(s - 1, 0)))
    return groups


def _count_rows(groups) -> int:
    total = 1
    for _, vals, c in groups:
        total *= comb(len(vals) + c - 1, c) if c else 1
    return total


def _expand(g, m, h, k, s, divisors, budget, nodes):
    groups = _groups(m, h, k, s, divisors)
    rows_expected = _count_rows(groups)
    nodes[0] += rows_expected * (2 if s else 1)
    if nodes[0] > budget:
        raise BudgetExceeded(f"enumeration for g={g}, n={2 * m} exceeds the node budget of {budget}; "
                             "raise PERIOD_ATLAS_NODE_BUDGET to continue")
    if rows_expected == 0:
        return
    values, offsets, counts = [], [0], []
    for _, vals, c in groups:
        values.extend(vals)
        offsets.append(len(values))
        counts.append(c)
    rows = multiset_product(np.array(values, dtype=np.int64), offsets, counts)
    b = len(divisors)
    nk = counts[-2]
    thetas, etas, zetas = rows[:, :b], rows[:, b:b + nk], rows[:, b + nk:]
    resid = (-(thetas.sum(axis=1) + etas.sum(axis=1) + zetas.sum(axis=1))) % m
    if h == 0:
        common = np.gcd.reduce(np.concatenate([rows, resid[:, None]], axis=1), axis=1)
        keep = np.gcd(common, m) == 1
        thetas, etas, zetas, resid = thetas[keep], etas[keep], zetas[keep], resid[keep]
    n = 2 * m
    for th, et, ze, r in zip(thetas.tolist(), etas.tolist(), zetas.tolist(), resid.tolist()):
        branch = tuple(2 * x for x in th)
        if s == 0:
            yield OrData(h, n, branch, tuple(2 * x for x in et + [r]), ())
            continue
        boundary = tuple(2 * x for x in et)
        for z in (r, r + m):
            if z % 2:
                yield OrData(h, n, branch, boundary, tuple(ze) + (z,))


@lru_cache(maxsize=512)
def _enumerate(g: int, n: int, budget: int) -> tuple[ClassRecord, ...]:
    m = n // 2
    found: dict[CanonKey, ClassRecord] = {}
    nodes = [0]
    divs = _proper_divisors(m)
    for h, k, s, T in _shapes(g, m):
        bmax = 0 if m == 1 else (2 * T) // m
        for b in range(bmax + 1):
            for divisors in _divisor_multisets(divs, b, T, m):
                for d in _expand(g, m, h, k, s, list(divisors), budget, nodes):
                    rep = validate_or(d)
                    if not rep.valid:
                        continue
                    if rep.genus != g:
                        raise AssertionError(f"{d}: genus {rep.genus} escaped the search bounds for g={g}")
                    key = canon_or(d)
                    if key not in found:
                        found[key] = ClassRecord.from_key(key, g)
    return tuple(found[k] for k in sorted(found))


def enumerate_classes(g: int, n: int, budget: int | None = None) -> list[ClassRecord]:
    """One record per conjugacy class of orientation reversing period-``n`` maps on ``Sigma_g``."""
    if g < 0:
        raise ValueError(f"genus must be nonnegative, got {g}")
    if n < 2 or n % 2:
        raise ValueError(f"period must be even and >= 2, got {n}")
    if n // 2 > MAX_M:
        raise BudgetExceeded(f"m = {n // 2} exceeds the supported maximum {MAX_M}")
    return list(_enumerate(g, n, node_budget() if budget is None else budget))


def classes_in_range(g: int, n_min: int, n_max: int | None = None) -> list[ClassRecord]:
    """All classes with ``n_min <= n <= n_max`` (default ``4g + 4``)."""
    n_max = 4 * g + 4 if n_max is None else n_max
    start = max(2, n_min + (n_min % 2))
    out = []
    for n in range(start, n_max + 1, 2):
        out.extend(enumerate_classes(g, n))
    return out


def max_period(g: int) -> int:
    """Largest period of an orientation reversing map on ``Sigma_g`` (``g >= 2``)."""
    if g < 2:
        raise ValueError(f"max_period needs g >= 2, got {g}")
    for n in range(4 * g + 4, 1, -2):
        if enumerate_classes(g, n):
            return n
    raise AssertionError(f"no orientation reversing map found on genus {g}")


# ---------------------------------------------------------------- quotient survey

ALLOWED_QUOTIENTS = frozenset({Quotient(True, 0, 2), Quotient(False, 1, 1), Quotient(False, 2, 0),
                               Quotient(True, 0, 1), Quotient(False, 1, 0)})
ALLOWED_HBC = frozenset({(0, 0, 2), (0, 1, 2), (0, 1, 1), (0, 2, 1), (0, 3, 1)})


class SurveyRow(NamedTuple):
    record: ClassRecord
    quotient_ok: bool
    hbc_ok: bool


def large_period_survey(g: int, strict: bool = True) -> list[SurveyRow]:
    """Classes with ``n > 2(g-1)``, checked against the five quotient surfaces and the ``(h,b,c)`` list."""
    if g < 2:
        raise ValueError(f"survey needs g >= 2, got {g}")
    rows = []
    for rec in classes_in_range(g, 2 * (g - 1) + 1):
        rows.append(SurveyRow(rec, rec.quotient in ALLOWED_QUOTIENTS, rec.bc in ALLOWED_HBC))
    if strict:
        for row in rows:
            if not (row.quotient_ok and row.hbc_ok):
                raise TableMismatch(f"{row.record.representative}: quotient {row.record.quotient}, "
                                    f"(h,b,c) = {row.record.bc}", row.record)
    return rows


# ---------------------------------------------------------------- tables

class TableRow(NamedTuple):
    label: str
    pre: PreData


def _bc3_rows(g: int) -> list[TableRow]:
    rows = []

    def add(label, m, thetas, etas):
        if m >= 2:
            rows.append(TableRow(label, PreData(0, m, thetas, etas)))

    if g % 2 == 0 and g >= 2:
        k = g // 2
        add("row 1", 4 * k + 2, (2 * k + 1, 2 * k), (1,))
        add("row 2", 4 * k, (2 * k, 2 * k - 1), (1,))
        add("row 2 (alternate)", 4 * k, (2 * k, 1), (2 * k - 1,))
    if g % 2 == 1 and g > 3:
        k = (g - 1) // 2
        add("row 3", 4 * k, (2 * k,), (2 * k - 1, 1))
    if g % 6 == 0 and g > 0:
        k = g // 6
        add("row 4", 9 * k + 3, (6 * k + 2, 3 * k), (1,))
        add("row 5", 9 * k, (3 * k, 6 * k - 1), (1,))
        tau = 3 * k
        if gcd(2 * tau - 1, 3 * tau) == 1:
            add("row 5 (alternate)", 9 * k, (3 * k, 1), (6 * k - 1,))
    if g % 6 == 2:
        k = (g - 2) // 6
        add("row 6", 9 * k + 3, (6 * k + 2, 1), (3 * k,))
        add("row 7", 9 * k + 6, (3 * k + 2, 6 * k + 3), (1,))
        add("row 8", 9 * k + 3, (3 * k + 1, 6 * k + 1), (1,))
        tau = 3 * k + 1
        if gcd(2 * tau - 1, 3 * tau) == 1:
            add("row 8 (alternate)", 9 * k + 3, (3 * k + 1, 1), (6 * k + 1,))
    if g % 6 == 4:
        k = (g - 4) // 6
        add("row 9", 9 * k + 6, (3 * k + 2, 1), (6 * k + 3,))
        add("row 10", 9 * k + 6, (6 * k + 4, 3 * k + 1), (1,))
        if k % 2 == 0:
            add("row 10 (alternate)", 9 * k + 6, (6 * k + 4, 1), (3 * k + 1,))
    sporadic = {1: ("row 11", 4, (2,), (1, 1)), 4: ("row 12", 6, (1, 2), (3,)),
                8: ("row 13", 12, (9, 2), (1,)), 12: ("row 14", 20, (15, 4), (1,)),
                18: ("row 15", 28, (7, 20), (1,)), 24: ("row 16", 36, (27, 8), (1,)),
                20: ("row 17", 30, (24, 5), (1,))}
    if g in sporadic:
        add(*sporadic[g])
    return rows


def _t0_rows(g: int) -> list[TableRow]:
    rows = []
    m = g + 1
    if m % 2 == 1 and m >= 3:
        rows.append(TableRow("type 1", PreData(0, m, (m - 1, 1), (m,))))
    m = g
    if m % 2 == 1 and m >= 3:
        rows.append(TableRow("type 2", PreData(0, m, (m - 1,), (1, m))))
    return rows


def _bc2_rows(g: int, m: int) -> list[TableRow]:
    if g == 0 and m >= 2:
        return [TableRow("row 1", PreData(0, m, (m - 1,), (1,)))]
    if g == 1:
        return [TableRow("row 2", PreData(0, m, (), (m - 1, 1)))]
    return []


def _bc4_rows(g: int) -> list[TableRow]:
    rows = []
    if g % 2 == 0 and g >= 2:
        k = g // 2
        rows.append(TableRow("row 1", PreData(0, 2 * k, (k, k, 2 * k - 1), (1,))))
    if g == 6:
        rows.append(TableRow("row 2", PreData(0, 6, (3, 4, 4), (1,))))
        rows.append(TableRow("row 3", PreData(0, 6, (3, 2, 4), (3,))))
    if g == 12:
        rows.append(TableRow("row 4", PreData(0, 12, (6, 8, 9), (1,))))
    if g == 30:
        rows.append(TableRow("row 5", PreData(0, 30, (15, 20, 24), (1,))))
    return rows


def table_rows(table: str, g: int, m: int | None = None) -> list[TableRow]:
    """Rows of ``table`` instantiated at genus ``g`` (and ``m`` where the row is free in ``m``)."""
    if table == "t0":
        rows = _t0_rows(g)
    elif table == "bc2":
        rows = _bc2_rows(g, m) if m is not None else []
    elif table == "bc3":
        rows = _bc3_rows(g)
    elif table == "bc4":
        rows = _bc4_rows(g)
    else:
        raise ValueError(f"unknown table {table!r}")
    return [r for r in rows if m is None or r.pre.m == m]


def four_g_minus_four_data(g: int) -> list[OrData]:
    """``D1..D4`` for odd ``g = 2k + 1``: the four lifts of ``[0,4k;(2k);(2k-1,1)]``."""
    if g % 2 == 0:
        raise ValueError("needs odd g")
    k = (g - 1) // 2
    n = 8 * k
    return [OrData(0, n, (4 * k,), (), (2 * k - 1, 1)),
            OrData(0, n, (4 * k,), (), (2 * k - 1, 4 * k + 1)),
            OrData(0, n, (4 * k,), (), (6 * k - 1, 1)),
            OrData(0, n, (4 * k,), (), (6 * k - 1, 4 * k + 1))]


def power_keys(d: OrData) -> set[CanonKey]:
    """Keys of every orientation reversing power ``f^r`` (``r`` odd, coprime to ``n``)."""
    return {canon_or(power_or(d, r)) for r in odd_units(d.n)}


@lru_cache(maxsize=None)
def _row_keys(table: str, g: int, n: int) -> dict[CanonKey, tuple[str, ...]]:
    out: dict[CanonKey, list[str]] = {}
    for row in table_rows(table, g, n // 2):
        try:
            lifts = lift_predata(row.pre)
        except (NotLiftable, NotRealizable):
            continue
        for lift in lifts:
            rep = validate_or(lift)
            if not rep.valid or rep.genus != g:
                continue
            for key in power_keys(lift):
                out.setdefault(key, []).append(row.label)
    return {k: tuple(dict.fromkeys(v)) for k, v in out.items()}


def table_of(rec: ClassRecord) -> str:
    """Which table is meant to cover this class: by ``y_j = 1`` first, then by ``b + c``."""
    if 1 in rec.y_list:
        return "t0"
    return {2: "bc2", 3: "bc3", 4: "bc4"}.get(rec.pre.b + rec.pre.c, "none")


class TableCheck(NamedTuple):
    record: ClassRecord
    table: str
    rows: tuple       # labels of the matching rows; empty on a mismatch

    @property
    def ok(self) -> bool:
        return bool(self.rows)


def match_record(rec: ClassRecord, table: str | None = None) -> TableCheck:
    table = table or table_of(rec)
    if table == "none":
        return TableCheck(rec, table, ())
    return TableCheck(rec, table, _row_keys(table, rec.g, rec.n).get(rec.key, ()))


@dataclass
class TableReport:
    name: str
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def mismatches(self) -> list:
        return [c for c in self.checks if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.mismatches and not any(n.startswith("FAIL") for n in self.notes)

    def raise_on_mismatch(self):
        if self.mismatches:
            bad = self.mismatches[0].record
            raise TableMismatch(f"{self.name}: {bad.representative} (g={bad.g}) matches no row "
                                f"of table {self.mismatches[0].table}", bad)
        for note in self.notes:
            if note.startswith("FAIL"):
                raise TableMismatch(f"{self.name}: {note}")
        return self


def verify_table_3g(g_set, strict: bool = True) -> TableReport:
    """Every class with ``n >= 3g`` is a power of a lift of a row of the table covering it."""
    report = TableReport("n >= 3g")
    for g in sorted(g_set):
        for rec in classes_in_range(g, 3 * g):
            report.checks.append(match_record(rec))
    return report.raise_on_mismatch() if strict else report


def check_table(name: str, g_max: int, strict: bool = False) -> TableReport:
    """Check one table over ``g <= g_max`` at its own hypotheses."""
    if name == "bc3":
        return verify_table_3g(range(2, g_max + 1), strict)
    report = TableReport(name)
    if name == "t0":
        for g in range(2, g_max + 1):
            for rec in classes_in_range(g, 2 * (g - 1) + 1):
                if 1 in rec.y_list:
                    report.checks.append(match_record(rec, "t0"))
    elif name == "bc4":
        for g in range(2, g_max + 1):
            for rec in classes_in_range(g, 2 * (g - 1) + 1):
                if 1 not in rec.y_list and rec.pre.b + rec.pre.c == 4:
                    report.checks.append(match_record(rec, "bc4"))
    elif name == "bc2":
        for g in range(0, g_max + 1):
            for rec in classes_in_range(g, 2, max(4 * g + 4, 12)):
                if rec.pre.h == 0 and 1 not in rec.y_list and rec.pre.b + rec.pre.c == 2:
                    report.checks.append(match_record(rec, "bc2"))
    elif name == "4g-4":
        for g in range(5, g_max + 1, 2):
            expected = power_keys(four_g_minus_four_data(g)[0])
            got = {}
            for rec in classes_in_range(g, 3 * g):
                got.setdefault(rec.n, set()).add(rec.key)
            other = sorted(n for n in got if n != 4 * g - 4)
            found = got.get(4 * g - 4, set())
            ok = found == expected and not other
            report.notes.append(f"{'ok' if ok else 'FAIL'}: g={g} classes at n=4g-4: {len(found)}, "
                                f"expected {len(expected)}, other periods >= 3g: {other}")
    else:
        raise ValueError(f"unknown table {name!r}")
    return report.raise_on_mismatch() if strict else report


# ---------------------------------------------------------------- triangle maps

class HiroseRow(NamedTuple):
    index: int
    tau_family: str
    m: int
    Q: tuple
    U: tuple

    def op_data(self) -> OpData:
        return OpData(0, self.m, tuple(u * self.m // q for q, u in zip(self.Q, self.U)), ())


def hirose_rows(tau: int) -> list[HiroseRow]:
    """Large-period maps of genus ``tau`` with three branch points over the sphere."""
    if tau < 0:
        raise ValueError("tau must be nonnegative")
    t = tau
    cand = [(1, "any tau", 4 * t + 2, (2, 2 * t + 1, 4 * t + 2), (1, t, 1)),
            (2, "any tau", 4 * t, (2, 4 * t, 4 * t), (1, 2 * t - 1, 1))]
    if t % 3 == 0:
        cand.append((3, "tau=3k", 3 * t + 3, (3, t + 1, 3 * t + 3), (2, t // 3, 1)))
    if t % 3 == 1:
        cand.append((4, "tau=3k+1", 3 * t + 3, (3, t + 1, 3 * t + 3), (1, 2 * (t // 3) + 1, 1)))
    if t % 3 in (0, 1):
        cand.append((5, "tau=3k or 3k+1", 3 * t, (3, 3 * t, 3 * t), (1, 2 * t - 1, 1)))
    if t % 3 == 2:
        cand.append((6, "tau=3k+2", 3 * t, (3, 3 * t, 3 * t), (2, t - 1, 1)))
    sporadic = {4: (7, 12, (4, 6, 12), (3, 1, 1)), 6: (8, 20, (4, 5, 20), (3, 1, 1)),
                9: (9, 28, (4, 7, 28), (1, 5, 1)), 12: (10, 36, (4, 9, 36), (3, 2, 1)),
                10: (11, 30, (5, 6, 30), (4, 1, 1))}
    if t in sporadic:
        i, m, Q, U = sporadic[t]
        cand.append((i, f"tau={t}", m, Q, U))
    rows = []
    for i, fam, m, Q, U in cand:
        if m < 2 or not (Q[0] <= Q[1] <= Q[2]) or any(m % q for q in Q):
            continue
        if any(gcd(u, q) != 1 for q, u in zip(Q, U)):
            continue
        row = HiroseRow(i, fam, m, Q, U)
        if validate_op(row.op_data()).valid:
            rows.append(row)
    return rows


__all__ = ["ClassRecord", "enumerate_classes", "classes_in_range", "max_period",
           "large_period_survey", "SurveyRow", "ALLOWED_QUOTIENTS", "ALLOWED_HBC",
           "TableRow", "table_rows", "four_g_minus_four_data", "power_keys", "table_of",
           "match_record", "TableCheck", "TableReport", "verify_table_3g", "check_table",
           "HiroseRow", "hirose_rows", "node_budget", "MAX_M", "eq_or", "genus_op"]
