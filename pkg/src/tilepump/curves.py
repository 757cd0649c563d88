"""Exact polygonal curves and their translates.

Coordinates are exact rationals: plain ``int`` when integral, otherwise
``fractions.Fraction``.  Keeping integral values as ``int`` matters for
speed; lattice paths never leave integer arithmetic.

A :class:`CurveSystem` holds ``k`` simple chains ``phi_i`` with base points
``p_i``, multipliers ``n_i`` and a vector ``v``.  It is checked against
three conditions:

1. ``phi_i`` runs from ``p_i`` to ``p_{i+1} + n_{i+1} v`` (indices cyclic),
2. ``phi_i`` misses ``phi_i + v``,
3. ``phi_i`` misses ``phi_j`` for ``i != j``.

With integer multipliers the three conditions can never hold together;
:func:`find_violation` produces an exact witness of that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from .errors import TheoremViolation

Rational = Union[int, Fraction]


def rational(value) -> Rational:
    """Coerce ``value`` (int, Fraction or ``"num/den"`` string) to a rational."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        value = Fraction(value.strip())
    elif isinstance(value, _RationalABC):
        value = Fraction(value)
    else:
        raise TypeError(f"not an exact rational: {value!r}")
    return value.numerator if value.denominator == 1 else value


def format_rational(value: Rational) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _ratio(num, den) -> Rational:
    q = Fraction(num, den)
    return q.numerator if q.denominator == 1 else q


class RPoint(NamedTuple):
    x: Rational
    y: Rational

    @classmethod
    def of(cls, x, y) -> "RPoint":
        return cls(rational(x), rational(y))

    def __add__(self, other):  # type: ignore[override]
        return RPoint(_norm(self.x + other[0]), _norm(self.y + other[1]))

    def __sub__(self, other):
        return RPoint(_norm(self.x - other[0]), _norm(self.y - other[1]))

    def __str__(self) -> str:
        return f"({format_rational(self.x)}, {format_rational(self.y)})"


class RVector(NamedTuple):
    x: Rational
    y: Rational

    @classmethod
    def of(cls, x, y) -> "RVector":
        return cls(rational(x), rational(y))

    def scaled(self, k) -> "RVector":
        return RVector(_norm(self.x * k), _norm(self.y * k))

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __str__(self) -> str:
        return f"({format_rational(self.x)}, {format_rational(self.y)})"


def _norm(value) -> Rational:
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def _require_nonzero(v) -> RVector:
    v = RVector.of(*v)
    if v.is_zero():
        raise ValueError("vector must be nonzero")
    return v


# --- segment kernel ---------------------------------------------------------

Segment = Tuple[Rational, Rational, Rational, Rational]


def _segment_overlap(a: Segment, b: Segment) -> Optional[Tuple[Rational, Rational]]:
    """Parameter interval ``[lo, hi]`` along ``a`` where ``a`` meets ``b``."""
    ax0, ay0, ax1, ay1 = a
    bx0, by0, bx1, by1 = b
    if (ax0 if ax0 > ax1 else ax1) < (bx0 if bx0 < bx1 else bx1):
        return None
    if (bx0 if bx0 > bx1 else bx1) < (ax0 if ax0 < ax1 else ax1):
        return None
    if (ay0 if ay0 > ay1 else ay1) < (by0 if by0 < by1 else by1):
        return None
    if (by0 if by0 > by1 else by1) < (ay0 if ay0 < ay1 else ay1):
        return None
    rx, ry = ax1 - ax0, ay1 - ay0
    sx, sy = bx1 - bx0, by1 - by0
    qx, qy = bx0 - ax0, by0 - ay0
    denom = rx * sy - ry * sx
    if denom != 0:
        t_num = qx * sy - qy * sx
        u_num = qx * ry - qy * rx
        if denom < 0:
            denom, t_num, u_num = -denom, -t_num, -u_num
        if 0 <= t_num <= denom and 0 <= u_num <= denom:
            t = _ratio(t_num, denom)
            return t, t
        return None
    if qx * ry - qy * rx != 0:
        return None  # parallel, not collinear
    rr = rx * rx + ry * ry
    t0 = qx * rx + qy * ry
    t1 = (bx1 - ax0) * rx + (by1 - ay0) * ry
    lo, hi = (t0, t1) if t0 <= t1 else (t1, t0)
    if lo < 0:
        lo = 0
    if hi > rr:
        hi = rr
    if lo > hi:
        return None
    return _ratio(lo, rr), _ratio(hi, rr)


def _point_param(seg: Segment, p: RPoint) -> Optional[Rational]:
    ax0, ay0, ax1, ay1 = seg
    rx, ry = ax1 - ax0, ay1 - ay0
    qx, qy = p[0] - ax0, p[1] - ay0
    if rx * qy - ry * qx != 0:
        return None
    dot = rx * qx + ry * qy
    rr = rx * rx + ry * ry
    if dot < 0 or dot > rr:
        return None
    return _ratio(dot, rr)


def _lerp(seg: Segment, t: Rational) -> RPoint:
    ax0, ay0, ax1, ay1 = seg
    return RPoint(_norm(ax0 + (ax1 - ax0) * t), _norm(ay0 + (ay1 - ay0) * t))


# --- chains -----------------------------------------------------------------


class ChainParam(NamedTuple):
    """A position along a chain: segment index, then parameter in [0, 1]."""

    segment: int
    t: Rational


class PolyChain:
    """A simple polygonal chain with exact rational vertices.

    A chain whose first and last vertices coincide is closed; it may touch
    itself only there.  Construction rejects anything else.
    """

    __slots__ = ("vertices", "_segments", "_bbox")

    def __init__(self, vertices: Iterable, *, check: bool = True):
        self.vertices: Tuple[RPoint, ...] = tuple(RPoint.of(*p) for p in vertices)
        self._segments = tuple(
            (a.x, a.y, b.x, b.y) for a, b in zip(self.vertices, self.vertices[1:])
        )
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        self._bbox = (min(xs), min(ys), max(xs), max(ys)) if xs else None
        if check:
            problem = self._defect()
            if problem:
                raise ValueError(f"invalid chain: {problem}")

    def _defect(self) -> Optional[str]:
        if len(self.vertices) < 2:
            return "needs at least two vertices"
        for i, (a, b) in enumerate(zip(self.vertices, self.vertices[1:])):
            if a == b:
                return f"vertices {i} and {i + 1} coincide"
        segs = self._segments
        last = len(segs) - 1
        closed = self.is_closed
        if closed and len(segs) < 3:
            return "a closed chain needs at least three segments"
        for i in range(len(segs)):
            for j in range(i + 1, len(segs)):
                hit = _segment_overlap(segs[i], segs[j])
                if hit is None:
                    continue
                if j == i + 1 and hit == (1, 1):
                    continue
                if closed and i == 0 and j == last and hit == (0, 0):
                    continue
                return f"segments {i} and {j} intersect at {_lerp(segs[i], hit[0])}"
        return None

    @property
    def segments(self) -> Tuple[Segment, ...]:
        return self._segments

    @property
    def start(self) -> RPoint:
        return self.vertices[0]

    @property
    def end(self) -> RPoint:
        return self.vertices[-1]

    @property
    def is_closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    @property
    def bbox(self):
        return self._bbox

    def point_at(self, where: ChainParam) -> RPoint:
        return _lerp(self._segments[where.segment], where.t)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyChain) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return "PolyChain([" + ", ".join(str(p) for p in self.vertices) + "])"


def translate_chain(chain: PolyChain, v, k=1) -> PolyChain:
    """Shift every vertex of ``chain`` by ``k * v``."""
    dx = _norm(rational(v[0]) * rational(k))
    dy = _norm(rational(v[1]) * rational(k))
    moved = PolyChain.__new__(PolyChain)
    moved.vertices = tuple(RPoint(_norm(p.x + dx), _norm(p.y + dy)) for p in chain.vertices)
    moved._segments = tuple(
        (x0 + dx, y0 + dy, x1 + dx, y1 + dy) for x0, y0, x1, y1 in chain.segments
    )
    x0, y0, x1, y1 = chain.bbox
    moved._bbox = (x0 + dx, y0 + dy, x1 + dx, y1 + dy)
    return moved


def _boxes_meet(a, b) -> bool:
    return not (a[2] < b[0] or b[2] < a[0] or a[3] < b[1] or b[3] < a[1])


def first_contact(a: PolyChain, b: PolyChain) -> Optional[ChainParam]:
    """Earliest position along ``a`` that also lies on ``b``."""
    if not _boxes_meet(a.bbox, b.bbox):
        return None
    bbox = b.bbox
    b_segs = b.segments
    for i, seg in enumerate(a.segments):
        x0, y0, x1, y1 = seg
        if (x0 if x0 > x1 else x1) < bbox[0] or (x0 if x0 < x1 else x1) > bbox[2]:
            continue
        if (y0 if y0 > y1 else y1) < bbox[1] or (y0 if y0 < y1 else y1) > bbox[3]:
            continue
        best = None
        for other in b_segs:
            hit = _segment_overlap(seg, other)
            if hit is not None and (best is None or hit[0] < best):
                best = hit[0]
                if best == 0:
                    break
        if best is not None:
            return ChainParam(i, best)
    return None


def chain_intersection(a: PolyChain, b: PolyChain) -> Optional[RPoint]:
    """A common point of ``a`` and ``b`` (the first one along ``a``), or None."""
    where = first_contact(a, b)
    return None if where is None else a.point_at(where)


def locate(chain: PolyChain, point) -> Optional[ChainParam]:
    """Earliest position of ``point`` along ``chain``, or None if off the chain."""
    point = RPoint.of(*point)
    for i, seg in enumerate(chain.segments):
        t = _point_param(seg, point)
        if t is not None:
            return ChainParam(i, t)
    return None


def on_chain(chain: PolyChain, point) -> bool:
    return locate(chain, point) is not None


# --- witnesses and systems --------------------------------------------------

SELF = "self-translation"
PAIRWISE = "pairwise"
ENDPOINT = "endpoint"


class ViolationWitness(NamedTuple):
    """An exact point showing that a curve condition fails.

    ``point`` lies on curve ``i`` and on curve ``j`` shifted by ``shift * v``.
    For condition 2 failures ``i == j`` and ``shift == 1``; for condition 3
    failures ``i < j`` and ``shift == 0``.  An ``endpoint`` witness names
    curve ``i`` and carries its actual offending endpoint.

    :func:`check_stripe_lemma` reuses the type with ``i, j`` set to the two
    translate multipliers ``k < l`` whose copies meet at ``point``.

    ``route`` records how the witness was obtained.
    """

    kind: str
    i: int
    j: int
    shift: int
    point: RPoint
    route: str = "direct"


@dataclass(frozen=True)
class CurveSystem:
    chains: Tuple[PolyChain, ...]
    base_points: Tuple[RPoint, ...]
    multipliers: Tuple[Rational, ...]
    v: RVector

    def __post_init__(self):
        object.__setattr__(self, "chains", tuple(self.chains))
        object.__setattr__(self, "base_points", tuple(RPoint.of(*p) for p in self.base_points))
        object.__setattr__(self, "multipliers", tuple(rational(n) for n in self.multipliers))
        object.__setattr__(self, "v", _require_nonzero(self.v))
        k = len(self.chains)
        if k < 1:
            raise ValueError("a curve system needs at least one curve")
        if len(self.base_points) != k or len(self.multipliers) != k:
            raise ValueError("chains, base points and multipliers must have equal length")
        if any(n <= 0 for n in self.multipliers):
            raise ValueError("multipliers must be positive")

    @property
    def k(self) -> int:
        return len(self.chains)

    def target(self, i: int) -> RPoint:
        """Where curve ``i`` must end: ``p_{i+1} + n_{i+1} v`` (cyclic)."""
        nxt = (i + 1) % self.k
        return self.base_points[nxt] + self.v.scaled(self.multipliers[nxt])

    def has_integer_multipliers(self) -> bool:
        return all(Fraction(n).denominator == 1 for n in self.multipliers)


class CurveReport(NamedTuple):
    condition1: Tuple[ViolationWitness, ...]
    condition2: Tuple[ViolationWitness, ...]
    condition3: Tuple[ViolationWitness, ...]

    def holds(self, condition: int) -> bool:
        return not (self.condition1, self.condition2, self.condition3)[condition - 1]

    @property
    def all_hold(self) -> bool:
        return not (self.condition1 or self.condition2 or self.condition3)


def validate_curve_system(system: CurveSystem) -> CurveReport:
    cond1, cond2, cond3 = [], [], []
    v = system.v
    for i, chain in enumerate(system.chains):
        if chain.start != system.base_points[i]:
            cond1.append(ViolationWitness(ENDPOINT, i, i, 0, chain.start))
        if chain.end != system.target(i):
            cond1.append(ViolationWitness(ENDPOINT, i, (i + 1) % system.k, 0, chain.end))
        hit = chain_intersection(chain, translate_chain(chain, v))
        if hit is not None:
            cond2.append(ViolationWitness(SELF, i, i, 1, hit))
    for i in range(system.k):
        for j in range(i + 1, system.k):
            hit = chain_intersection(system.chains[i], system.chains[j])
            if hit is not None:
                cond3.append(ViolationWitness(PAIRWISE, i, j, 0, hit))
    return CurveReport(tuple(cond1), tuple(cond2), tuple(cond3))


def verify_witness(system: CurveSystem, witness: ViolationWitness) -> bool:
    """Exactly re-check that ``witness`` demonstrates a condition 2 or 3 failure."""
    if witness.kind == SELF:
        if witness.i != witness.j or witness.shift != 1:
            return False
    elif witness.kind == PAIRWISE:
        if witness.i == witness.j or witness.shift != 0:
            return False
    else:
        return False
    first = system.chains[witness.i]
    second = translate_chain(system.chains[witness.j], system.v, witness.shift)
    return on_chain(first, witness.point) and on_chain(second, witness.point)


# --- single-curve results ---------------------------------------------------


def stripe_bound(chain: PolyChain, v) -> int:
    """``ceil(diameter / |v|) + 1`` computed exactly (Euclidean, over vertices)."""
    v = _require_nonzero(v)
    pts = chain.vertices
    diam2 = max(
        (a.x - b.x) ** 2 + (a.y - b.y) ** 2 for a in pts for b in pts
    )
    ratio = Fraction(diam2) / (v.x * v.x + v.y * v.y)
    c = math.isqrt(math.floor(ratio))
    while c * c < ratio:
        c += 1
    return c + 1


def check_stripe_lemma(chain: PolyChain, v, bound: int) -> Optional[ViolationWitness]:
    """Check that the translates ``chain + k v``, ``|k| <= bound``, are pairwise disjoint.

    Returns None when they are.  If ``chain`` already meets ``chain + v``
    the hypothesis fails and the witness names the pair ``(0, 1)``.
    """
    v = _require_nonzero(v)
    if bound < 1:
        raise ValueError("bound must be a positive integer")
    hit = chain_intersection(chain, translate_chain(chain, v))
    if hit is not None:
        return ViolationWitness(SELF, 0, 1, 1, hit)
    copies = {k: translate_chain(chain, v, k) for k in range(-bound, bound + 1)}
    for k in range(-bound, bound + 1):
        for l in range(k + 1, bound + 1):
            hit = chain_intersection(copies[k], copies[l])
            if hit is not None:
                return ViolationWitness(SELF, k, l, l - k, hit)
    return None


def self_translation_intersection(chain: PolyChain, v, n: int) -> RPoint:
    """A point of ``chain`` on ``chain + v``, for a chain from ``p`` to ``p + n v``."""
    v = _require_nonzero(v)
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    offset = chain.end - chain.start
    if offset != (v.x * n, v.y * n):
        raise ValueError(
            f"chain runs from {chain.start} to {chain.end}: offset {RVector(*offset)} "
            f"is not {n}*{v}"
        )
    hit = chain_intersection(chain, translate_chain(chain, v))
    if hit is None:
        raise TheoremViolation(f"chain from p to p+{n}v misses its shift by {v}")
    return hit


def gen_noninteger_example(x, eps) -> PolyChain:
    """A chain from (0, 0) to (x, 0) that misses its shift by (1, 0).

    ``x`` must be a non-integer with ``|x| > 1``.  The chain zigzags with
    slope controlled by ``eps``: ``2*floor(|x|) + 1`` segments.
    """
    x = rational(x)
    eps = rational(eps)
    if Fraction(x).denominator == 1:
        raise ValueError(f"x must not be an integer, got {format_rational(x)}")
    if abs(x) <= 1:
        raise ValueError("|x| must exceed 1; for |x| < 1 use a plain segment")
    if eps <= 0:
        raise ValueError("eps must be positive")
    sign = 1 if x > 0 else -1
    ax = abs(x)
    n = math.floor(ax)
    y = _norm(ax - n)
    vertices = []
    for k in range(n):
        drop = _norm(-k * eps)
        vertices.append((k, drop))
        vertices.append((_norm(k + y), _norm(n * eps + drop)))
    vertices.append((n, _norm(-n * eps)))
    vertices.append((ax, 0))
    return PolyChain((sign * px, py) for px, py in vertices)


# --- the reduction ----------------------------------------------------------


class Origin(NamedTuple):
    """Where a segment came from: original curve, integer shift, original segment."""

    curve: int
    shift: int
    segment: int


Provenance = Tuple[Tuple[Origin, ...], ...]


class Reduction(NamedTuple):
    system: CurveSystem
    provenance: Provenance
    first_curve: int  # M, 0-based index into the input system
    shift: int  # L
    junction: RPoint
    junction_param: ChainParam  # t1 along the first curve
    entry_param: ChainParam  # t2 along the shifted curve M
    collapsed: bool = False  # the spliced curve was a single point and was dropped


class ReductionError(ValueError):
    pass


def identity_provenance(system: CurveSystem) -> Provenance:
    return tuple(
        tuple(Origin(i, 0, s) for s in range(len(chain.segments)))
        for i, chain in enumerate(system.chains)
    )


def _shift_window(fixed_box, moving_box, v: RVector) -> range:
    """Shifts ``l >= 0`` for which ``moving_box + l v`` may meet ``fixed_box``."""
    lo, hi = Fraction(0), None
    for axis, c in ((0, v.x), (1, v.y)):
        f_lo, f_hi = fixed_box[axis], fixed_box[axis + 2]
        m_lo, m_hi = moving_box[axis], moving_box[axis + 2]
        if c == 0:
            if m_lo > f_hi or m_hi < f_lo:
                return range(0)
            continue
        a = Fraction(f_lo - m_hi, 1) / c
        b = Fraction(f_hi - m_lo, 1) / c
        if c < 0:
            a, b = b, a
        lo = max(lo, a)
        hi = b if hi is None else min(hi, b)
    if hi is None:
        raise ReductionError("shift window is unbounded")  # unreachable for v != 0
    start, stop = math.ceil(lo), math.floor(hi)
    return range(start, stop + 1) if start <= stop else range(0)


def _require_integer_condition1(system: CurveSystem) -> None:
    if not system.has_integer_multipliers():
        raise ValueError("multipliers must be positive integers")
    report_cond1 = [
        i for i, chain in enumerate(system.chains)
        if chain.start != system.base_points[i] or chain.end != system.target(i)
    ]
    if report_cond1:
        raise ValueError(f"condition 1 fails for curve(s) {report_cond1}")


def reduce_step(system: CurveSystem, provenance: Optional[Provenance] = None) -> Reduction:
    """Merge the first curve with its first contact among shifted later curves.

    Finds the earliest point ``t1`` of ``phi_1`` lying on some
    ``phi_m + l v`` (``m >= 2``, ``l >= 0``; ties broken by smallest ``m``
    then ``l``), splices ``phi_1`` up to it with ``phi_M + L v`` from that
    point on, and keeps the shifted curves after ``M``.  The result has
    ``k + 1 - M`` curves and still satisfies condition 1.
    """
    if system.k < 2:
        raise ValueError("reduction needs at least two curves")
    _require_integer_condition1(system)
    if provenance is None:
        provenance = identity_provenance(system)
    v = system.v
    first = system.chains[0]

    best = None
    for m in range(1, system.k):
        for l in _shift_window(first.bbox, system.chains[m].bbox, v):
            where = first_contact(first, translate_chain(system.chains[m], v, l))
            if where is not None and (best is None or where < best[0]):
                best = (where, m, l)
    if best is None:
        raise TheoremViolation("first curve meets no shifted later curve within the shift window")
    t1, m_sel, shift = best

    junction = first.point_at(t1)
    moved = translate_chain(system.chains[m_sel], v, shift)
    t2 = locate(moved, junction)
    assert t2 is not None

    head = list(first.vertices[: t1.segment + 1])
    head_origins = list(provenance[0][: t1.segment])
    if t1.t != 0:
        head.append(junction)
        head_origins.append(provenance[0][t1.segment])
    tail = [junction]
    tail_origins = []
    if t2.t != 1:
        tail_origins.append(provenance[m_sel][t2.segment])
    tail.extend(moved.vertices[t2.segment + 1:])
    if t2.t == 1:
        tail = tail[1:]
    tail_origins.extend(provenance[m_sel][t2.segment + 1:])
    tail_origins = [o._replace(shift=o.shift + shift) for o in tail_origins]

    vertices = head + tail[1:]
    kept = range(m_sel + 1, system.k)
    chains = [translate_chain(system.chains[i], v, shift) for i in kept]
    bases = [system.base_points[i] + v.scaled(shift) for i in kept]
    mults = [system.multipliers[i] for i in kept]
    prov = [tuple(o._replace(shift=o.shift + shift) for o in provenance[i]) for i in kept]
    collapsed = len(vertices) < 2
    if collapsed:
        # p_1 is the end of phi_M + L v: drop the empty splice and fold its
        # multiplier into the next curve's jump
        if not chains:
            raise ReductionError(f"spliced curve collapses to the point {junction}")
        mults[0] = mults[0] + system.multipliers[0] + shift
    else:
        chains.insert(0, PolyChain(vertices))
        bases.insert(0, system.base_points[0])
        mults.insert(0, system.multipliers[0] + shift)
        prov.insert(0, tuple(head_origins + tail_origins))
    reduced = CurveSystem(tuple(chains), tuple(bases), tuple(mults), v)
    return Reduction(reduced, tuple(prov), m_sel, shift, junction, t1, t2, collapsed)


def _direct_violation(system: CurveSystem, curves: Optional[Sequence[int]] = None,
                      route: str = "direct") -> Optional[ViolationWitness]:
    indices = range(system.k) if curves is None else sorted(set(curves))
    v = system.v
    for i in indices:
        chain = system.chains[i]
        hit = chain_intersection(chain, translate_chain(chain, v))
        if hit is not None:
            return ViolationWitness(SELF, i, i, 1, hit, route)
    for a in indices:
        for b in indices:
            if a < b:
                hit = chain_intersection(system.chains[a], system.chains[b])
                if hit is not None:
                    return ViolationWitness(PAIRWISE, a, b, 0, hit, route)
    return None


def _part_hits(step: Reduction, parent: CurveSystem, point: RPoint) -> Tuple[bool, bool]:
    """Whether ``point`` lies on the head (first curve up to t1) and tail of the spliced curve."""
    where = locate(parent.chains[0], point)
    head = where is not None and where <= step.junction_param
    moved = translate_chain(parent.chains[step.first_curve], parent.v, step.shift)
    where = locate(moved, point)
    tail = where is not None and where >= step.entry_param
    return head, tail


def lift_witness(step: Reduction, parent: CurveSystem,
                 witness: ViolationWitness) -> Optional[ViolationWitness]:
    """Turn a witness on ``step.system`` into one on the system it was reduced from.

    Returns None in the single case the splice argument does not cover: the
    spliced curve meets its shift with the tail part on the head's shift
    while ``L == 0``.
    """
    m, shift, v = step.first_curve, step.shift, parent.v
    back = v.scaled(shift)
    point = witness.point
    if step.collapsed:
        lifted = witness._replace(i=m + 1 + witness.i, j=m + 1 + witness.j, point=point - back)
    elif witness.kind == SELF and witness.i > 0:
        lifted = ViolationWitness(SELF, m + witness.i, m + witness.i, 1, point - back)
    elif witness.kind == PAIRWISE and witness.i > 0:
        lifted = ViolationWitness(PAIRWISE, m + witness.i, m + witness.j, 0, point - back)
    elif witness.kind == PAIRWISE:
        # psi meets a later curve: only its tail can (t1 is a first contact)
        lifted = ViolationWitness(PAIRWISE, m, m + witness.j, 0, point - back)
    elif witness.kind == SELF:
        junction = step.junction
        p_head, p_tail = _part_hits(step, parent, point)
        q_head, q_tail = _part_hits(step, parent, point - v)
        if p_head and q_head:
            lifted = ViolationWitness(SELF, 0, 0, 1, point)
        elif p_tail and q_tail:
            lifted = ViolationWitness(SELF, m, m, 1, point - back)
        elif p_head and q_tail:
            # point is on phi_M shifted by L+1, so it is the junction itself
            lifted = ViolationWitness(SELF, m, m, 1, junction - back)
        elif shift >= 1:
            # point - v is on phi_1 and phi_M shifted by L-1: the junction again
            lifted = ViolationWitness(SELF, m, m, 1, junction - v.scaled(shift - 1))
        else:
            return None
    else:
        raise ValueError(f"cannot lift a {witness.kind} witness")
    lifted = lifted._replace(route=witness.route)
    if not verify_witness(parent, lifted):
        raise TheoremViolation(f"lifted witness {lifted} does not verify")
    return lifted


def find_violation(system: CurveSystem, mode: str = "reduce") -> ViolationWitness:
    """Witness that condition 2 or 3 fails for an integer-multiplier system.

    ``mode="direct"`` scans every curve against its shift and every pair of
    curves.  ``mode="reduce"`` repeatedly applies :func:`reduce_step` down
    to one curve, intersects that curve with its shift, and lifts the point
    back through each reduction onto the original curves.

    A lift can get stuck (see :func:`lift_witness`).  The system is then
    relabelled, first by rotating which curve comes first and then by
    reversing every curve against ``-v``, and the reduction is retried;
    the witness route is ``"reduce"`` for the system as given and
    ``"reduce+relabel"`` otherwise.  Only if every relabelling gets stuck
    does a scan supply the witness, with route ``"reduce+scan"``.
    """
    _require_integer_condition1(system)
    if mode == "direct":
        witness = _direct_violation(system)
        if witness is None:
            raise TheoremViolation("integer-multiplier system satisfies all three conditions")
        return witness
    if mode != "reduce":
        raise ValueError(f"unknown mode {mode!r}")

    for number, (variant, back) in enumerate(_relabellings(system)):
        witness = _reduce_and_lift(variant)
        if witness is None:
            continue
        witness = back(witness)._replace(route="reduce" if number == 0 else "reduce+relabel")
        if not verify_witness(system, witness):
            raise TheoremViolation(f"relabelled witness {witness} does not verify")
        return witness
    return _fallback(system)


def _reduce_and_lift(system: CurveSystem) -> Optional[ViolationWitness]:
    steps = []
    current = system
    try:
        while current.k > 1:
            step = reduce_step(current)
            steps.append((current, step))
            current = step.system
    except ReductionError:
        return None
    final = current.chains[0]
    point = self_translation_intersection(final, current.v, int(current.multipliers[0]))
    witness: Optional[ViolationWitness] = ViolationWitness(SELF, 0, 0, 1, point, "reduce")
    for parent, step in reversed(steps):
        witness = lift_witness(step, parent, witness)
        if witness is None:
            return None
    return witness


def _relabellings(system: CurveSystem):
    """Equivalent systems paired with a map taking their witnesses back.

    Rotating the curve order keeps all three conditions.  So does reversing
    every curve: reversed ``phi_j`` runs from ``p_{j+1} + n_{j+1} v`` to
    ``p_j``, which is condition 1 for ``-v`` with the order reversed.
    """
    k, v = system.k, system.v
    for r in range(k):
        order = [(i + r) % k for i in range(k)]
        rotated = CurveSystem(
            tuple(system.chains[j] for j in order),
            tuple(system.base_points[j] for j in order),
            tuple(system.multipliers[j] for j in order),
            v,
        )
        yield rotated, _index_map(order, RVector(0, 0))
    for r in range(k):
        order = [(k - 1 - i + r) % k for i in range(k)]
        starts = [(j + 1) % k for j in order]
        flipped = CurveSystem(
            tuple(PolyChain(reversed(system.chains[j].vertices), check=False) for j in order),
            tuple(system.base_points[s] + v.scaled(system.multipliers[s]) for s in starts),
            tuple(system.multipliers[s] for s in starts),
            RVector(-v.x, -v.y),
        )
        yield flipped, _index_map(order, v)


def _index_map(order, self_offset: RVector):
    # a self witness for -v sits one step back along v
    def back(w: ViolationWitness) -> ViolationWitness:
        point = w.point + self_offset if w.kind == SELF else w.point
        i, j = order[w.i], order[w.j]
        if w.kind == PAIRWISE and i > j:
            i, j = j, i
        return w._replace(i=i, j=j, point=point)
    return back


def _fallback(system: CurveSystem) -> ViolationWitness:
    witness = _direct_violation(system, None, "reduce+scan")
    if witness is None:
        raise TheoremViolation("integer-multiplier system satisfies all three conditions")
    return witness


def lattice_chain(points: Sequence) -> PolyChain:
    """Polygonal chain through unit-step lattice points, merging straight runs."""
    pts = [tuple(p) for p in points]
    if len(pts) < 2:
        raise ValueError("a path needs at least two points")
    keep = [pts[0]]
    for prev, cur, nxt in zip(pts, pts[1:], pts[2:]):
        if (cur[0] - prev[0], cur[1] - prev[1]) != (nxt[0] - cur[0], nxt[1] - cur[1]):
            keep.append(cur)
    keep.append(pts[-1])
    return PolyChain(keep)
