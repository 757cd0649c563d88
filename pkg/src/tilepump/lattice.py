"""Discrete shapes on the square lattice.

Shapes are plain ``frozenset`` objects of :class:`Point`.  Connectivity is
always 4-adjacency.  Wherever a deterministic choice among points or
components is needed, points are compared by ``(y, x)``.
"""

from __future__ import annotations

from collections import deque
from typing import AbstractSet, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from .errors import TheoremViolation


class Point(NamedTuple):
    x: int
    y: int

    def __add__(self, v):  # type: ignore[override]
        return Point(self.x + v[0], self.y + v[1])

    def __sub__(self, v):
        return Point(self.x - v[0], self.y - v[1])


class Vector(NamedTuple):
    dx: int
    dy: int

    def __neg__(self) -> "Vector":
        return Vector(-self.dx, -self.dy)

    def __mul__(self, k: int) -> "Vector":  # type: ignore[override]
        return Vector(self.dx * k, self.dy * k)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.dx == 0 and self.dy == 0


Shape = frozenset  # frozenset[Point], nonempty and 4-connected

NEIGHBOR_OFFSETS: Tuple[Tuple[int, int], ...] = ((0, 1), (1, 0), (0, -1), (-1, 0))


def yx_key(p: Tuple[int, int]) -> Tuple[int, int]:
    return (p[1], p[0])


def smallest_point(points: Iterable[Point]) -> Point:
    return min(points, key=yx_key)


def neighbors(p: Point) -> Iterator[Point]:
    x, y = p
    for dx, dy in NEIGHBOR_OFFSETS:
        yield Point(x + dx, y + dy)


def require_nonzero(v) -> Vector:
    v = Vector(*v)
    if v.is_zero():
        raise ValueError("vector must be nonzero")
    return v


def is_connected(points: AbstractSet[Point]) -> bool:
    if not points:
        return False
    start = next(iter(points))
    seen = {start}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for q in neighbors(p):
            if q in points and q not in seen:
                seen.add(q)
                queue.append(q)
    return len(seen) == len(points)


def make_shape(points: Iterable) -> Shape:
    """Build a shape, checking that it is nonempty and 4-connected."""
    cells = frozenset(Point(*p) for p in points)
    if not cells:
        raise ValueError("a shape must be nonempty")
    if not is_connected(cells):
        raise ValueError("a shape must be 4-connected")
    return cells


def connected_components(points: Iterable) -> List[Shape]:
    """Partition ``points`` into maximal 4-connected subsets.

    Components are returned ordered by their smallest ``(y, x)`` member.
    """
    remaining = {Point(*p) for p in points}
    components = []
    # scanning in (y, x) order means each new component's seed is its minimum
    for seed in sorted(remaining, key=yx_key):
        if seed not in remaining:
            continue
        remaining.discard(seed)
        comp = {seed}
        queue = deque([seed])
        while queue:
            p = queue.popleft()
            for q in neighbors(p):
                if q in remaining:
                    remaining.discard(q)
                    comp.add(q)
                    queue.append(q)
        components.append(frozenset(comp))
    return components


def translate_shape(shape: Iterable, v) -> Shape:
    dx, dy = v
    return frozenset(Point(x + dx, y + dy) for x, y in shape)


def bounding_box(points: Iterable) -> Tuple[int, int, int, int]:
    """Return ``(min_x, min_y, max_x, max_y)``."""
    pts = list(points)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return min(xs), min(ys), max(xs), max(ys)


def diameter(shape: Iterable) -> int:
    """Largest coordinate extent of the shape (Chebyshev diameter)."""
    min_x, min_y, max_x, max_y = bounding_box(shape)
    return max(max_x - min_x, max_y - min_y)


def _translate_stack(s0: Shape, v: Vector) -> Tuple[Shape, Shape]:
    s1 = translate_shape(s0, v)
    s2 = translate_shape(s1, v)
    return s1, s2


def find_nonconflicting_component(s0: Iterable, v) -> Shape:
    """Return a component of ``S2 \\ S1`` that misses ``S0``.

    Here ``S1 = S0 + v`` and ``S2 = S1 + v``.  Such a component always
    exists for a finite connected ``S0`` and nonzero ``v``; among several,
    the one holding the smallest ``(y, x)`` point is returned.
    """
    v = require_nonzero(v)
    s0 = frozenset(Point(*p) for p in s0)
    s1, s2 = _translate_stack(s0, v)
    difference = s2 - s1
    assert difference, "S2 \\ S1 is empty for a finite shape and nonzero v"
    for comp in connected_components(difference):
        if comp.isdisjoint(s0):
            return comp
    raise TheoremViolation(
        f"every component of S2 \\ S1 meets S0 (v={tuple(v)}, |S0|={len(s0)})"
    )


class WalkStep(NamedTuple):
    component: Shape
    anchor: Point
    exit_multiplier: int


class WalkTrace(NamedTuple):
    steps: Tuple[WalkStep, ...]
    final_component: Shape


def shape_walk(s0: Iterable, v) -> WalkTrace:
    """Walk conflicting components of ``S2 \\ S1`` until a non-conflicting one.

    From a component ``C`` that meets ``S0`` at anchor ``p`` (its smallest
    such point), jump to ``p + n*v`` with ``n >= 1`` minimal so that the
    target leaves ``S1``.  The target lies in another component of
    ``S2 \\ S1``; the walk never revisits a component.
    """
    v = require_nonzero(v)
    s0 = frozenset(Point(*p) for p in s0)
    s1, s2 = _translate_stack(s0, v)
    difference = s2 - s1
    components = connected_components(difference)
    owner = {p: i for i, comp in enumerate(components) for p in comp}

    current: Optional[int] = next(
        (i for i, comp in enumerate(components) if not comp.isdisjoint(s0)), None
    )
    if current is None:
        return WalkTrace((), find_nonconflicting_component(s0, v))

    steps = []
    visited = set()
    while True:
        comp = components[current]
        if comp.isdisjoint(s0):
            return WalkTrace(tuple(steps), comp)
        if current in visited:
            raise TheoremViolation(f"shape walk revisited component {sorted(comp, key=yx_key)}")
        visited.add(current)
        anchor = smallest_point(comp & s0)
        n = 1
        while anchor + v * n in s1:
            n += 1
        target = anchor + v * n
        if target not in difference:
            raise TheoremViolation(f"walk target {tuple(target)} is not in S2 \\ S1")
        steps.append(WalkStep(comp, anchor, n))
        current = owner[target]


def fixed_polyominoes(max_size: int) -> List[Shape]:
    """All fixed polyominoes with at most ``max_size`` cells.

    Each polyomino is normalized so its bounding box starts at the origin.
    The list is ordered by size, then by sorted cell tuple.
    """
    if max_size < 1:
        return []
    layer = {frozenset([Point(0, 0)])}
    result = sorted(layer, key=_poly_key)
    for _ in range(1, max_size):
        grown = set()
        for poly in layer:
            for p in poly:
                for q in neighbors(p):
                    if q not in poly:
                        grown.add(_normalize(poly | {q}))
        layer = grown
        result.extend(sorted(layer, key=_poly_key))
    return result


def _normalize(cells) -> Shape:
    min_x = min(p[0] for p in cells)
    min_y = min(p[1] for p in cells)
    return frozenset(Point(x - min_x, y - min_y) for x, y in cells)


def _poly_key(cells):
    return (len(cells), sorted(cells, key=yx_key))
