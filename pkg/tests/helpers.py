"""Random valid data, shared by the property tests and the acceptance suite."""

import random

from period_atlas.data_model import OrData
from period_atlas.or_maps import validate_or


def build_or(rng, m, h, b, k, s):
    """A datum with the given shape whose last slot is solved from the sum condition, or None."""
    n = 2 * m
    if m == 1 and b:
        return None
    if m % 2 == 0 and k:
        return None
    if k + s == 0:
        return None
    thetas = [rng.randrange(1, m) for _ in range(b)]
    etas = [rng.randrange(m) for _ in range(k)]
    zetas = [rng.randrange(1, n, 2) for _ in range(s)]
    if s:
        r = (-(sum(thetas) + sum(etas) + sum(zetas[:-1]))) % m
        lifts = [z for z in (r, r + m) if z % 2]
        if not lifts:
            return None
        zetas[-1] = rng.choice(lifts)
    else:
        etas[-1] = (-(sum(thetas) + sum(etas[:-1]))) % m
    d = OrData(h, n, [2 * t for t in thetas], [2 * e for e in etas], zetas)
    return d if validate_or(d).valid else None


def random_or(rng, max_m=32, max_len=5, max_h=2):
    """Keep drawing until a valid datum with ``b + k + s <= max_len`` appears."""
    while True:
        m = rng.randint(1, max_m)
        total = rng.randint(1, max_len)
        s = rng.randint(0, total)
        k = 0 if m % 2 == 0 else rng.randint(0, total - s)
        b = total - s - k
        d = build_or(rng, m, rng.randint(0, max_h), b, k, s)
        if d is not None:
            return d


def corpus(seed, size, **kw):
    rng = random.Random(seed)
    return [random_or(rng, **kw) for _ in range(size)]


def random_move(rng, d):
    """Apply one randomly chosen legal move (R0)-(R4); return ``(label, new data)``."""
    from period_atlas.equivalence import move_r0, move_r1, move_r2, move_r3, move_r4

    options = ["R0", "R1"]
    if d.s:
        options.append("R2")
    if d.s >= 3:
        options.append("R3")
    if d.s == 2:
        options.append("R4")
    label = rng.choice(options)
    if label == "R0":
        perms = [rng.sample(range(x), x) for x in (d.b, d.k, d.s)]
        return label, move_r0(d, *perms)
    if label == "R1":
        return label, move_r1(d)
    if label == "R2":
        kinds = [k for k, size in (("branch", d.b), ("boundary", d.k), ("one_sided", d.s)) if size]
        if d.s == 1:
            kinds = [k for k in kinds if k != "one_sided"] or ["none"]
        kind = rng.choice(kinds)
        if kind == "none":
            return "R1", move_r1(d)
        size = {"branch": d.b, "boundary": d.k, "one_sided": d.s}[kind]
        i = rng.randrange(size)
        t = rng.choice([x for x in range(d.s) if kind != "one_sided" or x != i])
        return f"R2:{kind}", move_r2(d, kind, i, t)
    if label == "R3":
        return label, move_r3(d, rng.sample(range(d.s), 3))
    return label, move_r4(d, rng.choice((1, -1)))
