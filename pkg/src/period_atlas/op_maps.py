"""Orientation preserving periodic maps: realizability, genus, total valency, powers.

Every function here accepts :class:`OpData` or :class:`PreData`; pre-data is
just the data of an orientation preserving map of period ``m``.
"""

from __future__ import annotations

from dataclasses import replace
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from .data_model import Condition, OpData, PreData, ValidationReport, mod_inverse, valency_of
from .errors import NotClosed, NotCoprime, NotRealizable, PreconditionError


def euler_term(d) -> int:
    """Return ``2*tau - 2`` as an exact integer (Riemann-Hurwitz for a cyclic cover)."""
    n = d.period
    total = n * (2 * d.h - 2)
    total += sum(n - gcd(x, n) for x in d.thetas)
    total += sum(n - gcd(x, n) for x in d.etas)
    return total


def validate_op(d) -> ValidationReport:
    n = d.period
    bad = [x for x in d.thetas if x % n == 0]
    conds = [Condition("(1) theta_i != 0 mod n", not bad,
                       f"zero branch values at positions {[i for i, x in enumerate(d.thetas) if x % n == 0]}" if bad else "")]

    total = (sum(d.thetas) + sum(d.etas)) % n
    conds.append(Condition("(2) sum of entries = 0 mod n", total == 0,
                           "" if total == 0 else f"sum is {total} mod {n}"))

    if d.h == 0:
        g = reduce(gcd, d.thetas + d.etas, n)
        conds.append(Condition("(3) h = 0 implies gcd of entries and n is 1", g == 1,
                               "" if g == 1 else f"gcd is {g}"))
    else:
        conds.append(Condition("(3) h = 0 implies gcd of entries and n is 1", True, "h > 0"))

    chi = euler_term(d)
    ok = chi % 2 == 0 and chi >= -2
    conds.append(Condition("(4) genus formula gives an integer tau >= 0", ok,
                           f"2*tau-2 = {chi}"))
    return ValidationReport(tuple(conds), genus=chi // 2 + 1 if ok else None)


def _require_valid(d):
    report = validate_op(d)
    if not report.valid:
        names = ", ".join(c.name for c in report.failures())
        raise NotRealizable(f"{d} is not realizable: {names}", report)
    return report


def genus_op(d) -> int:
    """Genus of the surface carrying the map described by ``d``."""
    return _require_valid(d).genus


def total_valency(d) -> tuple[int, list[Fraction]]:
    """``(n, [u_1/q_1, ..., u_b/q_b])`` for closed-surface data.

    The fractions sum to an integer; this is asserted.
    """
    if d.etas:
        raise NotClosed(f"total valency needs closed-surface data (c = 0), got c = {len(d.etas)}")
    _require_valid(d)
    n = d.period
    fracs = []
    for x in d.thetas:
        v = valency_of(x, n)
        fracs.append(Fraction(v.u, v.q))
    assert sum(fracs).denominator == 1, "valency sum must be an integer"
    return n, fracs


def check_sphere_lcm(d) -> bool:
    """For sphere quotients: lcm of all multiplicities but one equals the period, for each one."""
    if d.etas or d.h != 0:
        raise PreconditionError("needs closed data with h = 0")
    _require_valid(d)
    n = d.period
    qs = [n // gcd(x, n) for x in d.thetas]
    return all(reduce(lcm, qs[:i] + qs[i + 1:], 1) == n for i in range(len(qs)))


def canon_op(d):
    """Sorted representative; equal outputs iff the maps are conjugate."""
    _require_valid(d)
    return replace(d, thetas=tuple(sorted(d.thetas)), etas=tuple(sorted(d.etas)))


def power_op(d, r: int):
    """Data of the ``r``-th power: every entry is multiplied by ``r^-1 mod n``."""
    n = d.period
    if gcd(r, n) != 1:
        raise NotCoprime(f"exponent {r} is not coprime to the period {n}")
    rinv = mod_inverse(r % n, n)
    return replace(d, thetas=tuple(x * rinv for x in d.thetas),
                   etas=tuple(x * rinv for x in d.etas))


__all__ = ["OpData", "PreData", "validate_op", "genus_op", "total_valency",
           "check_sphere_lcm", "canon_op", "power_op", "euler_term"]
