"""Rewriting relations (R0)-(R4) on orientation reversing data and the conjugacy test.

Two data describe conjugate maps iff they are related by the moves

* (R0) permute each of the three lists,
* (R1) negate every entry,
* (R2) negate one branch/boundary entry ``a`` and add ``a`` to a one-sided entry,
  or negate a one-sided entry ``z`` and add ``2z`` to another one-sided entry,
* (R3) merge three one-sided entries into their sum and raise ``h`` by one,
* (R4) for ``s = 2``, shift ``(z1, z2)`` to ``(z1 + 2d, z2 - 2d)``.

The canonical key is the lexicographically least sorted tuple reachable after
greedy (R3) reduction.  Two routes compute it: :func:`closure` walks the move
graph breadth-first, and the default route reads the minimum off the orbit
structure directly.

Orbit structure, for reduced data with ``s`` in ``{1, 2}``.  Group the branch
(and separately the boundary) entries by the pair ``{r, n-r}`` with
``r <= n-r``.  (R2) can put any number ``p'`` of the ``c_r`` entries of a pair
at ``r``; the one-sided sum then moves by ``(p - p')*r`` where ``p`` is the
starting count.  The sorted lists are smallest with every entry at ``r``, which
fixes the one-sided sum up to ``+m`` when an entry equals ``m``.  For
``s = 2`` the first one-sided value ranges over ``{+-z1} + H`` with
``H = <2*gcd(d, m), z1 + z2>`` in ``Z_2m``; the second is the sum minus the first.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache, reduce
from itertools import product
from math import gcd
from typing import Iterator, NamedTuple

from .data_model import OrData, PreData
from .or_maps import power_or, predata_of, quotient_of, validate_or
from .errors import NotRealizable, PreconditionError


class CanonKey(NamedTuple):
    shape: tuple        # (n, h, b, k, s, orientable) after (R3) reduction
    entries: tuple      # (branch, boundary, one_sided), each sorted

    def data(self) -> OrData:
        n, h = self.shape[0], self.shape[1]
        return OrData(h, n, *self.entries)

    def __str__(self):
        return str(self.data())


def d_of(p: PreData, k: int | None = None) -> int:
    """Shift parameter of (R4).

    ``1`` when ``h > 0``.  Otherwise the gcd of the branch values and of the
    first ``k`` boundary values (mirror circles only; one-sided values are
    excluded); ``k=None`` uses every ``eta``.  The empty gcd is taken as ``m``.
    """
    if p.h > 0:
        return 1
    vals = p.thetas + (p.etas if k is None else p.etas[:k])
    g = reduce(gcd, vals, 0)
    return g if g else p.m


def shift_of(d: OrData) -> int:
    """``d`` of (R4) for orientation reversing data."""
    if d.h > 0:
        return 1
    g = reduce(gcd, [x // 2 for x in d.branch + d.boundary], 0)
    return g if g else d.m


def r3_reduce(d: OrData) -> OrData:
    """Apply (R3) to the three largest one-sided entries until ``s <= 2``."""
    if d.s < 3:
        return d
    h, z = d.h, sorted(d.one_sided)
    while len(z) >= 3:
        merged = (z[-3] + z[-2] + z[-1]) % d.n
        z = sorted(z[:-3] + [merged])
        h += 1
    return OrData(h, d.n, d.branch, d.boundary, tuple(z))


def balance_sum(d: OrData) -> int:
    return sum(d.one_sided) % d.n


# ---------------------------------------------------------------- single moves

def move_r0(d: OrData, pb, pk, ps) -> OrData:
    return OrData(d.h, d.n, tuple(d.branch[i] for i in pb),
                  tuple(d.boundary[i] for i in pk), tuple(d.one_sided[i] for i in ps))


def move_r1(d: OrData) -> OrData:
    return OrData(d.h, d.n, tuple(-x for x in d.branch), tuple(-x for x in d.boundary),
                  tuple(-z for z in d.one_sided))


def move_r2(d: OrData, kind: str, index: int, target: int) -> OrData:
    """Flip entry ``index`` of list ``kind`` and feed it into one-sided entry ``target``.

    ``kind`` is ``"branch"``, ``"boundary"`` or ``"one_sided"``; in the last case the
    target gains twice the flipped value and must differ from ``index``.
    """
    if not d.one_sided:
        raise PreconditionError("(R2) needs s > 0")
    z = list(d.one_sided)
    if kind == "one_sided":
        if target == index:
            raise PreconditionError("(R2) on a one-sided entry needs a different target")
        a = z[index]
        z[index] = -a
        z[target] += 2 * a
        return OrData(d.h, d.n, d.branch, d.boundary, tuple(z))
    vals = list(getattr(d, kind))
    a = vals[index]
    vals[index] = -a
    z[target] += a
    if kind == "branch":
        return OrData(d.h, d.n, tuple(vals), d.boundary, tuple(z))
    return OrData(d.h, d.n, d.branch, tuple(vals), tuple(z))


def move_r3(d: OrData, triple=None) -> OrData:
    """Merge three one-sided entries (default: the last three) into one."""
    s = d.s
    if s < 3:
        raise PreconditionError("(R3) needs s >= 3")
    triple = tuple(triple) if triple is not None else (s - 3, s - 2, s - 1)
    rest = [z for i, z in enumerate(d.one_sided) if i not in triple]
    merged = sum(d.one_sided[i] for i in triple)
    return OrData(d.h + 1, d.n, d.branch, d.boundary, tuple(rest) + (merged,))


def move_r4(d: OrData, sign: int = 1) -> OrData:
    if d.s != 2:
        raise PreconditionError("(R4) needs s = 2")
    step = 2 * shift_of(d) * sign
    z1, z2 = d.one_sided
    return OrData(d.h, d.n, d.branch, d.boundary, (z1 + step, z2 - step))


def neighbours(d: OrData) -> Iterator[OrData]:
    """Every single (R1), (R2), (R4) move, with (R0) folded in by sorting."""
    yield move_r1(d)
    s = d.s
    if s:
        for kind, vals in (("branch", d.branch), ("boundary", d.boundary)):
            for i in range(len(vals)):
                for t in range(s):
                    yield move_r2(d, kind, i, t)
        for i in range(s):
            for t in range(s):
                if t != i:
                    yield move_r2(d, "one_sided", i, t)
    if s == 2:
        yield move_r4(d, 1)
        yield move_r4(d, -1)


def closure(d: OrData) -> set[OrData]:
    """Breadth-first orbit of the (R3)-reduced, sorted data under the moves."""
    start = r3_reduce(d).sorted()
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in neighbours(cur):
            nxt = nxt.sorted()
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


# ---------------------------------------------------------------- canonical keys

def _lex(d: OrData):
    return (d.h, d.branch, d.boundary, d.one_sided)


def _shape(d: OrData) -> tuple:
    return (d.n, d.h, d.b, d.k, d.s, d.s == 0)


def _half_min(values, n):
    """Move every entry to ``min(v, n - v)``; return the new sorted list and the one-sided shift."""
    shift = 0
    out = []
    for v in values:
        w = n - v if v else 0
        if w < v:
            # flipping v to -v feeds v into the one-sided sum
            shift += v
            out.append(w)
        else:
            out.append(v)
    return tuple(sorted(out)), shift


def _orbit_min(d: OrData) -> OrData:
    n, m = d.n, d.m
    if d.s == 0:
        neg = move_r1(d).sorted()
        return min(d.sorted(), neg, key=_lex)

    branch, sb = _half_min(d.branch, n)
    boundary, sk = _half_min(d.boundary, n)
    shift = sb + sk
    extra = [0, m] if m in branch else [0]

    if d.s == 1:
        z = d.one_sided[0]
        best = min((z + shift + e) % n for e in extra)
        return OrData(d.h, n, branch, boundary, (best,))

    z1, z2 = d.one_sided
    sigma = z1 + z2
    D = gcd(shift_of(d), m)
    step = gcd(gcd(2 * D, sigma % n), n)
    cands = {x for x in range(1, n, 2) if (x - z1) % step == 0 or (x + z1) % step == 0}
    best = None
    for e in extra:
        tot = (sigma + shift + e) % n
        for x in cands:
            pair = tuple(sorted((x, (tot - x) % n)))
            if best is None or pair < best:
                best = pair
    return OrData(d.h, n, branch, boundary, best)


@lru_cache(maxsize=1 << 16)
def _canon_cached(d: OrData, method: str) -> CanonKey:
    if method == "bfs":
        rep = min(closure(d), key=_lex)
    else:
        rep = _orbit_min(r3_reduce(d).sorted())
    return CanonKey(_shape(rep), (rep.branch, rep.boundary, rep.one_sided))


def canon_or(d: OrData, method: str = "orbit") -> CanonKey:
    """Canonical key of the conjugacy class described by ``d``.

    ``method="bfs"`` explores the move graph explicitly; the default reads the
    minimum off the orbit structure.  Both return the same key.
    """
    rep = validate_or(d)
    if not rep.valid:
        raise NotRealizable(f"{d} is not realizable", rep)
    if method not in ("orbit", "bfs"):
        raise ValueError(f"unknown method {method!r}")
    return _canon_cached(d, method)


def eq_or(d1: OrData, d2: OrData) -> bool:
    """True iff the two data describe conjugate maps."""
    k1 = canon_or(d1)
    k2 = canon_or(d2)
    if k1.shape != k2.shape:
        return False
    return k1 == k2


# ---------------------------------------------------------------- local conjugacy

def local_keys(h: int, n: int, branch, boundary, s: int) -> list[CanonKey]:
    """Classes with the given branch and boundary values and any ``s`` one-sided values."""
    keys = set()
    odds = range(1, n, 2)
    if s == 0:
        cands = [()]
    elif s == 1:
        cands = ((z,) for z in odds)
    elif s == 2:
        cands = ((z1, z2) for z1 in odds for z2 in odds if z1 <= z2)
    else:
        raise PreconditionError("reduce with (R3) first: s must be at most 2")
    for zs in cands:
        cand = OrData(h, n, tuple(branch), tuple(boundary), zs)
        if validate_or(cand).valid:
            keys.add(canon_or(cand))
    return sorted(keys)


def local_classes(d: OrData) -> list[CanonKey]:
    """Distinct conjugacy classes among data sharing the local invariants of ``d``.

    For non-orientable quotients the local invariants are ``n``, the reduced shape
    and the unsigned branch and boundary values; the one-sided values range over
    everything realizable.  (R2) makes the signs of branch and boundary values
    irrelevant there, so only one-sided values are varied.  For orientable
    quotients the signed values up to a global sign are kept, which leaves a
    single class; :func:`local_classes_unsigned` drops the signs instead.
    """
    e = r3_reduce(d)
    rep = validate_or(e)
    if not rep.valid:
        raise NotRealizable(f"{d} is not realizable", rep)
    if e.s == 0:
        return [canon_or(e)]
    return local_keys(e.h, e.n, e.branch, e.boundary, e.s)


def local_classes_unsigned(d: OrData) -> list[CanonKey]:
    """Like :func:`local_classes`, but for orientable quotients every sign pattern is tried."""
    e = r3_reduce(d)
    if e.s:
        return local_classes(e)
    if not validate_or(e).valid:
        raise NotRealizable(f"{d} is not realizable")
    keys = set()
    vals = e.branch + e.boundary
    for signs in product((1, -1), repeat=len(vals)):
        flipped = [v * sg for v, sg in zip(vals, signs)]
        cand = OrData(e.h, e.n, flipped[:e.b], flipped[e.b:], ())
        if validate_or(cand).valid:
            keys.add(canon_or(cand))
    return sorted(keys)


def local_class_bound(d: OrData) -> tuple[int, float]:
    """``(integer bound, literal bound)`` on the number of local classes.

    ``1`` for orientable quotients, ``1`` or ``2`` for odd non-orientable genus
    (``m`` odd or even), ``(gcd(d, m) + 1) / 2`` for even non-orientable genus; the
    integer bound rounds the last one up.
    """
    e = r3_reduce(d)
    if e.s == 0:
        return 1, 1.0
    if e.s == 1:
        b = 1 if e.m % 2 else 2
        return b, float(b)
    lit = (gcd(shift_of(e), e.m) + 1) / 2
    return -(-(gcd(shift_of(e), e.m) + 1) // 2), lit


def m_plus_one_partner(d: OrData) -> CanonKey:
    """Key of ``f^(m+1)``: the possible second local class when ``s = 1`` and ``m`` is even."""
    return canon_or(power_or(d, d.m + 1))


__all__ = ["CanonKey", "d_of", "shift_of", "r3_reduce", "balance_sum", "closure",
           "canon_or", "eq_or", "local_classes", "local_classes_unsigned", "local_keys", "local_class_bound", "neighbours",
           "move_r0", "move_r1", "move_r2", "move_r3", "move_r4", "m_plus_one_partner",
           "quotient_of", "predata_of"]
