"""Gcd-free cross-check of every orbit count used by the genus formulas.

The orbit number of a loop with monodromy value ``w`` is the number of cycles
of ``c**w`` where ``c`` is the standard ``n``-cycle on ``{0..n-1}``.  Here that
number comes from walking the permutation (see :mod:`period_atlas._kernels`),
never from ``gcd``, so agreement with the closed formulas is a real check.

Genus of the orientation reversing cover.  The pre-data of ``f`` describes
``f**2`` on one half, a surface of genus ``tau`` with ``c = k + s`` boundary
circles.  Riemann-Hurwitz gives ``2*tau - 2`` from the cycle counts of every
branch and boundary value, and then ``g - 1 = 2*tau - 2 + (sum over the c
boundary values of their cycle counts)``.  For example the pre-data
``[0,8;(4);(3,1)]`` of ``D1 = [0,16;(8);(--);(3,1)]`` gives::

    2*tau - 2 = 8*(2*0 - 2 + (1 - 4/8) + (1 - 1/8) + (1 - 1/8)) = 8*(1/4) = 2

so ``tau = 2``, and then ``g - 1 = 2 + 1 + 1 = 4``, hence ``g = 5``.  Both
boundary values are counted in each step; this reproduces the closed genus
condition on orientation reversing data.
"""

from __future__ import annotations

from .data_model import OrData, Residue
from .errors import NotRealizable, ValidatorMismatch
from .op_maps import genus_op, validate_op
from .or_maps import genus_or, predata_of, validate_or
from ._kernels import cycle_table


def cycle_count(w, n: int | None = None) -> tuple[int, int]:
    """``(number of cycles, common cycle length)`` of ``c**w``."""
    if isinstance(w, Residue):
        n, w = w.modulus, w.value
    if n is None:
        raise TypeError("modulus required for a plain integer")
    counts, lengths = cycle_table(n)
    w %= n
    return int(counts[w]), int(lengths[w])


def _cycles(w, n):
    return cycle_count(w, n)[0]


def oracle_euler(d) -> int:
    """``2*tau - 2`` for orientation preserving data or pre-data, from cycle counts."""
    n = d.period
    total = n * (2 * d.h - 2)
    total += sum(n - _cycles(x, n) for x in d.thetas)
    total += sum(n - _cycles(x, n) for x in d.etas)
    return total


def oracle_genus(p, check: bool = True) -> int:
    """Genus ``tau`` of the cover described by orientation preserving data ``p``.

    With ``check`` the result is compared with :func:`genus_op` and a
    disagreement raises :class:`ValidatorMismatch`.
    """
    if not validate_op(p).valid:
        raise NotRealizable(f"{p} is not realizable")
    chi = oracle_euler(p)
    tau = chi // 2 + 1
    if check and (chi % 2 or tau != genus_op(p)):
        raise ValidatorMismatch(f"{p}: cycle-count genus {chi / 2 + 1} vs formula {genus_op(p)}")
    return tau


def oracle_genus_or(d: OrData, check: bool = True) -> int:
    """Genus ``g`` of the surface carrying the orientation reversing data ``d``."""
    if not validate_or(d).valid:
        raise NotRealizable(f"{d} is not realizable")
    pre = predata_of(d)
    chi = oracle_euler(pre)
    g = chi + sum(_cycles(e, pre.m) for e in pre.etas) + 1
    if check and g != genus_or(d):
        raise ValidatorMismatch(f"{d}: cycle-count genus {g} vs formula {genus_or(d)}")
    return g


__all__ = ["cycle_count", "oracle_euler", "oracle_genus", "oracle_genus_or"]
