"""Repetitious assemblies and the pumping construction.

An assembly is repetitious with vector ``v`` when it overlaps ``a + v`` and
agrees with it on the overlap.  :func:`pump_once` grows such an assembly by
one translated component and keeps it repetitious with the same ``v``, so
:func:`pump` yields an unbounded sequence of strictly larger producible
assemblies.  Every step re-verifies the facts it relies on and raises
:class:`~tilepump.errors.TheoremViolation` if one fails.
"""

from __future__ import annotations

from typing import List, NamedTuple, Tuple

from .errors import TheoremViolation
from .lattice import (
    Shape,
    Vector,
    connected_components,
    find_nonconflicting_component,
    is_connected,
    require_nonzero,
    translate_shape,
)
from .tiles import (
    Assembly,
    TileSystem,
    canonicalize,
    consistent,
    enumerate_producible,
    is_stable,
    overlapping,
    restriction,
    union_assemblies,
)


class Repetition(NamedTuple):
    assembly: Assembly
    v: Vector
    overlap: frozenset


class PumpStep(NamedTuple):
    assembly: Assembly
    added: Shape  # the translated component C1 that was attached


class PumpTrace(NamedTuple):
    v: Vector
    iterations: Tuple[PumpStep, ...]

    @property
    def sizes(self) -> List[int]:
        return [len(step.assembly) for step in self.iterations]


def canonical_sign(v) -> Vector:
    """Flip ``v`` so its first nonzero coordinate is positive."""
    v = Vector(*v)
    return v if (v.dx > 0 or (v.dx == 0 and v.dy > 0)) else -v


def repetition_overlap(assembly: Assembly, v) -> frozenset:
    """``dom a`` intersected with ``dom (a + v)``."""
    dx, dy = v
    return frozenset(p for p in assembly.placement if (p.x - dx, p.y - dy) in assembly.placement)


def is_repetition(assembly: Assembly, v) -> bool:
    v = Vector(*v)
    if v.is_zero():
        return False
    overlap = repetition_overlap(assembly, v)
    return bool(overlap) and all(assembly[p] == assembly[p - v] for p in overlap)


def find_repetitions(assembly: Assembly) -> List[Repetition]:
    """Every vector (up to sign) for which the assembly is repetitious."""
    cells = list(assembly.placement)
    candidates = {canonical_sign(p - q) for p in cells for q in cells if p != q}
    found = []
    for v in sorted(candidates):
        if is_repetition(assembly, v):
            found.append(Repetition(assembly, v, repetition_overlap(assembly, v)))
    return found


def staged_union_plan(a: Assembly, b: Assembly, system: TileSystem) -> List[Assembly]:
    """Pieces of ``b`` missing from ``a``, in an order that assembles ``a ∪ b``.

    The pieces are ``b`` restricted to each component of ``dom b \\ dom a``,
    ordered by smallest ``(y, x)`` point.  Adding them one at a time to
    ``a`` keeps every intermediate assembly connected and stable; this is
    checked, not assumed.
    """
    if not consistent(a, b):
        raise ValueError("assemblies are inconsistent")
    if not overlapping(a, b):
        raise ValueError("assemblies do not overlap")
    missing = b.placement.keys() - a.placement.keys()
    pieces = [restriction(b, comp) for comp in connected_components(missing)]
    partial = dict(a.placement)
    for piece in pieces:
        partial.update(piece.placement)
        if not is_connected(partial.keys()):
            raise TheoremViolation("staged union lost connectivity")
        if not is_stable(Assembly(partial, check=False), system):
            raise TheoremViolation("staged union is not stable")
    return pieces


def pump_once(assembly: Assembly, v, system: TileSystem) -> PumpStep:
    """Grow a repetitious assembly by one translated component.

    With ``S0 = dom a`` and ``S2 = S0 + 2v``, take a component ``C2`` of
    ``S2 \\ (S0 + v)`` missing ``S0`` and attach ``(a + v)`` restricted to
    ``C1 = C2 - v``.
    """
    v = require_nonzero(v)
    if not is_repetition(assembly, v):
        raise ValueError(f"{tuple(v)} is not a repetition vector of the assembly")
    s0 = assembly.domain
    s1 = translate_shape(s0, v)
    c2 = find_nonconflicting_component(s0, v)
    c1 = translate_shape(c2, -v)

    if not c1 <= s1 - s0:
        raise TheoremViolation("C1 is not inside S1 \\ S0")
    if c1 not in connected_components(s1 - s0):
        raise TheoremViolation("C1 is not a full component of S1 \\ S0")
    added = restriction(assembly.translate(v), c1)
    grown = union_assemblies(assembly, added)
    if not is_stable(grown, system):
        raise TheoremViolation("pumped assembly is not stable")
    if not is_repetition(grown, v):
        raise TheoremViolation("pumped assembly is no longer repetitious")
    if len(grown) != len(assembly) + len(c1) or len(grown) <= len(assembly):
        raise TheoremViolation("pumped assembly did not grow by |C1|")
    return PumpStep(grown, c1)


def pump(assembly: Assembly, v, iterations: int, system: TileSystem) -> PumpTrace:
    if iterations < 1:
        raise ValueError("iterations must be positive")
    v = require_nonzero(v)
    steps = []
    current = assembly
    for _ in range(iterations):
        step = pump_once(current, v, system)
        steps.append(step)
        current = step.assembly
    return PumpTrace(v, tuple(steps))


def certify_producible_small(assembly: Assembly, system: TileSystem, bound: int) -> bool:
    """Check producibility by exhaustive enumeration up to ``bound`` tiles."""
    if len(assembly) > bound:
        raise ValueError(f"assembly has {len(assembly)} tiles, more than the bound {bound}")
    system.check_names(assembly)
    return canonicalize(assembly) in enumerate_producible(system, bound)
