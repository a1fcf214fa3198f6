"""Orientation reversing periodic maps: realizability, pre-data, lifting, genus, powers."""

from __future__ import annotations

from dataclasses import replace
from itertools import product
from math import gcd
from typing import NamedTuple

from .data_model import Condition, OrData, PreData, ValidationReport, mod_inverse
from .errors import EvenExponent, MalformedData, NotCoprime, NotLiftable, NotRealizable
from .op_maps import validate_op


class Quotient(NamedTuple):
    """Topological type of the orbit surface: ``Sigma_{genus,boundary}`` or ``N_{genus,boundary}``."""

    orientable: bool
    genus: int
    boundary: int

    def __str__(self):
        return f"{'Sigma' if self.orientable else 'N'}_{{{self.genus},{self.boundary}}}"


def quotient_of(d: OrData) -> Quotient:
    if d.s == 0:
        return Quotient(True, d.h, d.k)
    return Quotient(False, 2 * d.h + d.s, d.k)


def _parity_ok(d: OrData) -> bool:
    return (all(x % 2 == 0 for x in d.branch + d.boundary)
            and all(z % 2 == 1 for z in d.one_sided))


def predata_of(d: OrData) -> PreData:
    """Halve the branch and boundary values and reduce the one-sided values mod ``m``."""
    if not _parity_ok(d):
        raise MalformedData(f"{d}: branch/boundary entries must be even and one-sided entries odd")
    m = d.m
    return PreData(d.h, m, tuple(x // 2 for x in d.branch),
                   tuple(x // 2 for x in d.boundary) + tuple(z % m for z in d.one_sided))


def genus_numerator(d: OrData) -> int:
    """``g - 1`` from the genus condition, with ``theta_i = branch_i / 2``."""
    m = d.m
    return m * (2 * d.h - 2 + d.k + d.s) + sum(m - gcd(x // 2, m) for x in d.branch)


def validate_or(d: OrData) -> ValidationReport:
    m = d.m
    conds = [Condition("(1) k+s > 0", d.k + d.s > 0),
             Condition("(2) when m is even, k = 0", m % 2 == 1 or d.k == 0,
                       "" if m % 2 == 1 or d.k == 0 else f"m = {m} is even but k = {d.k}")]
    even_z = [z for z in d.one_sided if z % 2 == 0]
    conds.append(Condition("(3) zeta_l is odd", not even_z,
                           f"even one-sided values {even_z}" if even_z else ""))
    odd_bb = [x for x in d.branch + d.boundary if x % 2]
    conds.append(Condition("branch and boundary entries are even", not odd_bb,
                           f"odd values {odd_bb}" if odd_bb else ""))

    if _parity_ok(d):
        pre = predata_of(d)
        rep = validate_op(pre)
        conds.append(Condition("(4) pre-data is orientation preserving data", rep.valid,
                               "; ".join(c.name for c in rep.failures())))
        bad_t = [x // 2 for x in d.boundary if gcd(x // 2, m) % 2 == 0]
        bad_t += [z for z in d.one_sided if gcd(z, 2 * m) % 2 == 0]
        conds.append(Condition("orbit lengths of boundary and one-sided loops are odd", not bad_t,
                               f"even orbit length for {bad_t}" if bad_t else ""))
    else:
        conds.append(Condition("(4) pre-data is orientation preserving data", False,
                               "pre-data undefined: parity violated"))

    g1 = genus_numerator(d)
    conds.append(Condition("(5) genus formula gives g >= 0", g1 >= -1, f"g - 1 = {g1}"))
    report = ValidationReport(tuple(conds), genus=g1 + 1 if g1 >= -1 else None)
    return report


def _require_valid(d: OrData) -> ValidationReport:
    report = validate_or(d)
    if not report.valid:
        names = ", ".join(c.name for c in report.failures())
        raise NotRealizable(f"{d} is not realizable: {names}", report)
    return report


def genus_or(d: OrData) -> int:
    return _require_valid(d).genus


def lift_predata(p: PreData) -> list[OrData]:
    """Every data whose pre-data is ``p``.

    For even ``m`` each ``eta_j`` becomes a one-sided value with either odd lift in
    ``{eta_j, eta_j + m}``.  For odd ``m`` each ``eta_j`` becomes either a boundary
    value ``2*eta_j`` or a one-sided value (its unique odd lift).
    """
    rep = validate_op(p)
    if not rep.valid:
        raise NotRealizable(f"{p} is not realizable orientation preserving data", rep)
    if not p.etas:
        raise NotLiftable(f"{p}: no boundary values (c = 0)")
    m = p.m
    even = [e for e in p.etas if gcd(e, m) % 2 == 0]
    if even:
        raise NotLiftable(f"{p}: gcd(eta, m) is even for eta in {even}")

    branch = tuple(2 * t for t in p.thetas)
    options = []
    for e in p.etas:
        odd_lifts = [z for z in (e, e + m) if z % 2 == 1]
        if m % 2 == 0:
            options.append([("s", z) for z in odd_lifts])
        else:
            options.append([("k", 2 * e)] + [("s", z) for z in odd_lifts])

    lifts = []
    for choice in product(*options):
        boundary = tuple(v for kind, v in choice if kind == "k")
        one_sided = tuple(v for kind, v in choice if kind == "s")
        lifts.append(OrData(p.h, 2 * m, branch, boundary, one_sided))
    return lifts


def power_or(d: OrData, r: int) -> OrData:
    """Data of ``f^r`` for odd ``r`` coprime to the period."""
    if r % 2 == 0:
        raise EvenExponent(f"exponent {r} is even; f^{r} preserves orientation")
    if gcd(r, d.n) != 1:
        raise NotCoprime(f"exponent {r} is not coprime to {d.n}")
    rinv = mod_inverse(r % d.n, d.n)
    return replace(d, branch=tuple(x * rinv for x in d.branch),
                   boundary=tuple(x * rinv for x in d.boundary),
                   one_sided=tuple(z * rinv for z in d.one_sided))


def odd_units(n: int) -> list[int]:
    """Exponents ``r`` in ``[1, n)`` that are odd and coprime to ``n``."""
    return [r for r in range(1, n, 2) if gcd(r, n) == 1]


def multiplicities(p: PreData) -> tuple[list[int], list[int]]:
    """``x_i = m / gcd(theta_i, m)`` and ``y_j = m / gcd(eta_j, m)``."""
    m = p.m
    return [m // gcd(t, m) for t in p.thetas], [m // gcd(e, m) for e in p.etas]
