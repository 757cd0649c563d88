"""Slow, independent reference implementations used to cross-check the package.

Nothing here imports the algorithms under test; only plain data types.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import product

STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))
SIDE_OFFSET = {"N": (0, 1), "E": (1, 0), "S": (0, -1), "W": (-1, 0)}
FACING = {"N": "S", "E": "W", "S": "N", "W": "E"}


# --- lattice ----------------------------------------------------------------


def flood_components(cells):
    cells = set(cells)
    comps = []
    while cells:
        seed = cells.pop()
        comp = {seed}
        todo = deque([seed])
        while todo:
            x, y = todo.popleft()
            for dx, dy in STEPS:
                q = (x + dx, y + dy)
                if q in cells:
                    cells.remove(q)
                    comp.add(q)
                    todo.append(q)
        comps.append(frozenset(comp))
    return comps


def qualifying_components(s0, v):
    """Components of (S0+2v) minus (S0+v) that avoid S0."""
    s0 = {tuple(p) for p in s0}
    dx, dy = v
    s1 = {(x + dx, y + dy) for x, y in s0}
    s2 = {(x + 2 * dx, y + 2 * dy) for x, y in s0}
    return [c for c in flood_components(s2 - s1) if not (c & s0)]


# --- tiles ------------------------------------------------------------------


def glue(system, name, side):
    t = next(t for t in system.tiles if t.name == name)
    return {"N": t.north, "E": t.east, "S": t.south, "W": t.west}[side]


def strength(system, g1, g2):
    for a, b, s in system.strength.pairs():
        if {a, b} == {g1, g2}:
            return s
    return 0


def bond_between(system, placement, p, q):
    d = (q[0] - p[0], q[1] - p[1])
    side = next(s for s, off in SIDE_OFFSET.items() if off == d)
    return strength(system, glue(system, placement[p], side),
                    glue(system, placement[q], FACING[side]))


def exhaustive_min_cut(placement, system):
    """Minimum over all 2-partitions of the crossing bond strength."""
    cells = sorted(placement)
    if len(cells) < 2:
        return None
    first, rest = cells[0], cells[1:]
    best = None
    for mask in range(2 ** len(rest) - 1):
        side = {first} | {c for i, c in enumerate(rest) if mask >> i & 1}
        total = 0
        for p in side:
            for dx, dy in STEPS:
                q = (p[0] + dx, p[1] + dy)
                if q in placement and q not in side:
                    total += bond_between(system, placement, p, q)
        best = total if best is None else min(best, total)
    return best


def oracle_stable(placement, system):
    cut = exhaustive_min_cut(placement, system)
    return cut is None or cut >= system.temperature


def brute_attachments(a, b, system, reach=None):
    """Every shift w (within a generous window) where b+w binds stably to a."""
    ax = [p[0] for p in a]
    ay = [p[1] for p in a]
    bx = [p[0] for p in b]
    by = [p[1] for p in b]
    found = set()
    for wx in range(min(ax) - max(bx) - 1, max(ax) - min(bx) + 2):
        for wy in range(min(ay) - max(by) - 1, max(ay) - min(by) + 2):
            moved = {(x + wx, y + wy): n for (x, y), n in b.items()}
            if set(moved) & set(a):
                continue
            merged = dict(a)
            merged.update(moved)
            total = 0
            for p in moved:
                for dx, dy in STEPS:
                    q = (p[0] + dx, p[1] + dy)
                    if q in a:
                        total += bond_between(system, merged, p, q)
            if total >= system.temperature:
                found.add((wx, wy))
    return found


def _normal(placement):
    mx = min(p[0] for p in placement)
    my = min(p[1] for p in placement)
    return frozenset(((x - mx, y - my), n) for (x, y), n in placement.items())


def naive_producible(system, max_size):
    """Fixed point of pairwise stable attachment, recomputed from scratch each round."""
    found = {_normal({(0, 0): t.name}) for t in system.tiles}
    while True:
        new = set(found)
        for a, b in product(found, repeat=2):
            if len(a) + len(b) > max_size:
                continue
            da, db = dict(a), dict(b)
            for w in brute_attachments(da, db, system):
                merged = dict(da)
                merged.update({(x + w[0], y + w[1]): n for (x, y), n in db.items()})
                new.add(_normal(merged))
        if new == found:
            return found
        found = new


# --- segments ---------------------------------------------------------------


def _on_segment(p, a, b):
    cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
    return (cross == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segments_meet(a, b, c, d):
    """Exact closed-segment intersection test by Cramer's rule."""
    a, b, c, d = [tuple(Fraction(x) for x in p) for p in (a, b, c, d)]
    r = (b[0] - a[0], b[1] - a[1])
    s = (d[0] - c[0], d[1] - c[1])
    den = r[0] * s[1] - r[1] * s[0]
    if den != 0:
        qp = (c[0] - a[0], c[1] - a[1])
        t = (qp[0] * s[1] - qp[1] * s[0]) / den
        u = (qp[0] * r[1] - qp[1] * r[0]) / den
        return 0 <= t <= 1 and 0 <= u <= 1
    return any(_on_segment(p, *seg) for p, seg in
               ((a, (c, d)), (b, (c, d)), (c, (a, b)), (d, (a, b))))


def polylines_meet(pts1, pts2):
    segs1 = list(zip(pts1, pts1[1:]))
    segs2 = list(zip(pts2, pts2[1:]))
    return any(segments_meet(*s, *t) for s in segs1 for t in segs2)


def shifted(pts, dx, dy):
    return [(Fraction(x) + dx, Fraction(y) + dy) for x, y in pts]
