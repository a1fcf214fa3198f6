"""Residues mod n and the record types describing periodic maps.

All records are immutable.  Entries are stored as plain ``int`` already
reduced to ``[0, n)``; signed input is accepted and reduced on construction,
so that every equality check downstream is representative equality.
Input order of the entry lists is kept as given (sorting is the job of the
canonical forms in :mod:`period_atlas.op_maps` and
:mod:`period_atlas.equivalence`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable

from .errors import MalformedData, NotCoprime


def mod_inverse(u: int, n: int) -> int:
    """Return ``v`` in ``[0, n)`` with ``u*v = 1 (mod n)``.

    >>> mod_inverse(3, 10)
    7
    """
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if gcd(u, n) != 1:
        raise NotCoprime(f"{u} is not invertible mod {n}")
    return pow(u, -1, n) if n > 1 else 0


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError(f"moduli differ: {self.modulus} vs {other.modulus}")
            return other.value
        return other

    def __add__(self, other):
        return Residue(self.value + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return Residue(self.value - self._coerce(other), self.modulus)

    def __rsub__(self, other):
        return Residue(self._coerce(other) - self.value, self.modulus)

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __mul__(self, other):
        return Residue(self.value * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def inverse(self) -> "Residue":
        return Residue(mod_inverse(self.value, self.modulus), self.modulus)

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.modulus})"


@dataclass(frozen=True)
class Valency:
    """Orbit length ``t``, multiplicity ``q``, unit ``u`` and rotation numerator ``p``."""

    t: int
    q: int
    u: int
    p: int


def valency_of(w, n: int | None = None) -> Valency:
    """Valency ``[t, q, u]`` of a loop whose monodromy value is ``w`` in ``Z_n``.

    ``t = gcd(w, n)``, ``q = n/t``, ``u = w/t`` and ``p = u^-1 mod q``.
    ``w = 0`` is allowed and gives the full stabilizer ``(n, 1, 0, 0)``.

    >>> valency_of(4, 10)
    Valency(t=2, q=5, u=2, p=3)
    """
    if isinstance(w, Residue):
        if n is not None and n != w.modulus:
            raise ValueError("modulus mismatch")
        n, w = w.modulus, w.value
    if n is None:
        raise TypeError("modulus required for a plain integer")
    w %= n
    t = gcd(w, n)
    q = n // t
    u = w // t
    p = mod_inverse(u, q) if q > 1 else 0
    return Valency(t, q, u, p)


def _reduce(values: Iterable[int], n: int) -> tuple[int, ...]:
    out = []
    for v in values:
        if isinstance(v, Residue):
            v = v.value
        if isinstance(v, bool) or not isinstance(v, int):
            raise MalformedData(f"entries must be integers, got {v!r}")
        out.append(v % n)
    return tuple(out)


def _check_h(h):
    if isinstance(h, bool) or not isinstance(h, int) or h < 0:
        raise MalformedData(f"quotient genus must be a nonnegative integer, got {h!r}")


@dataclass(frozen=True)
class OpData:
    """``[h, n; (theta_1..theta_b); (eta_1..eta_c)]`` for an orientation preserving map."""

    h: int
    n: int
    thetas: tuple[int, ...] = ()
    etas: tuple[int, ...] = ()

    def __post_init__(self):
        _check_h(self.h)
        if not isinstance(self.n, int) or self.n < 2:
            raise MalformedData(f"period must be an integer >= 2, got {self.n!r}")
        object.__setattr__(self, "thetas", _reduce(self.thetas, self.n))
        object.__setattr__(self, "etas", _reduce(self.etas, self.n))

    @property
    def period(self) -> int:
        return self.n

    @property
    def b(self) -> int:
        return len(self.thetas)

    @property
    def c(self) -> int:
        return len(self.etas)

    def __str__(self):
        return f"[{self.h},{self.n};{_fmt(self.thetas)};{_fmt(self.etas)}]"


@dataclass(frozen=True)
class PreData:
    """Pre-data ``[h, m; (theta_i); (eta_1..eta_{k+s})]``: the data of the square on one half."""

    h: int
    m: int
    thetas: tuple[int, ...] = ()
    etas: tuple[int, ...] = ()

    def __post_init__(self):
        _check_h(self.h)
        if not isinstance(self.m, int) or self.m < 1:
            raise MalformedData(f"m must be a positive integer, got {self.m!r}")
        object.__setattr__(self, "thetas", _reduce(self.thetas, self.m))
        object.__setattr__(self, "etas", _reduce(self.etas, self.m))

    @property
    def period(self) -> int:
        return self.m

    @property
    def b(self) -> int:
        return len(self.thetas)

    @property
    def c(self) -> int:
        return len(self.etas)

    def __str__(self):
        return f"[{self.h},{self.m};{_fmt(self.thetas)};{_fmt(self.etas)}]"


@dataclass(frozen=True)
class OrData:
    """``[h, 2m; (2theta_i); (2eta_j); (zeta_l)]`` for an orientation reversing map.

    Parity of the entries is *not* enforced here; :func:`period_atlas.or_maps.validate_or`
    reports it, so that malformed data can still be loaded and diagnosed.
    """

    h: int
    n: int
    branch: tuple[int, ...] = ()
    boundary: tuple[int, ...] = ()
    one_sided: tuple[int, ...] = ()

    def __post_init__(self):
        _check_h(self.h)
        if not isinstance(self.n, int) or self.n < 2 or self.n % 2:
            raise MalformedData(f"period of an orientation reversing map must be even >= 2, got {self.n!r}")
        object.__setattr__(self, "branch", _reduce(self.branch, self.n))
        object.__setattr__(self, "boundary", _reduce(self.boundary, self.n))
        object.__setattr__(self, "one_sided", _reduce(self.one_sided, self.n))

    @property
    def m(self) -> int:
        return self.n // 2

    @property
    def period(self) -> int:
        return self.n

    @property
    def b(self) -> int:
        return len(self.branch)

    @property
    def k(self) -> int:
        return len(self.boundary)

    @property
    def s(self) -> int:
        return len(self.one_sided)

    def sorted(self) -> "OrData":
        return OrData(self.h, self.n, tuple(sorted(self.branch)),
                      tuple(sorted(self.boundary)), tuple(sorted(self.one_sided)))

    def __str__(self):
        return (f"[{self.h},{self.n};{_fmt(self.branch)};{_fmt(self.boundary)};"
                f"{_fmt(self.one_sided)}]")


def _fmt(values):
    return "(" + ",".join(map(str, values)) + ")" if values else "(--)"


@dataclass(frozen=True)
class Condition:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    conditions: tuple[Condition, ...]
    genus: int | None = None
    extras: dict = field(default_factory=dict, compare=False)

    @property
    def valid(self) -> bool:
        return all(c.passed for c in self.conditions)

    def __bool__(self):
        return self.valid

    def failures(self) -> list[Condition]:
        return [c for c in self.conditions if not c.passed]

    def as_dict(self) -> dict:
        return {
            "valid": self.valid,
            "genus": self.genus,
            "conditions": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                           for c in self.conditions],
        }
