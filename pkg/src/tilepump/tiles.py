"""The two-handed (hierarchical) tile assembly model.

A :class:`TileSystem` is a set of tile types, a temperature and a symmetric
glue strength table.  An :class:`Assembly` is an immutable, connected map
from lattice points to tile-type names.

Producibility is explored by :func:`enumerate_producible`, which closes the
set of single tiles under stable two-handed attachment up to a size bound.
The search is exponential in that bound and is meant for small systems.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Set, Tuple

import networkx as nx

from .lattice import NEIGHBOR_OFFSETS, Point, Vector, is_connected, yx_key

NULL_GLUE = "null"
DIRECTIONS = ("N", "E", "S", "W")
OFFSETS = {"N": (0, 1), "E": (1, 0), "S": (0, -1), "W": (-1, 0)}
OPPOSITE = {"N": "S", "E": "W", "S": "N", "W": "E"}


class StrengthFn:
    """Symmetric glue interaction strengths; undeclared pairs have strength 0."""

    __slots__ = ("_table",)

    def __init__(self, pairs: Optional[Mapping[Tuple[str, str], int]] = None):
        table: Dict[FrozenSet[str], int] = {}
        for (g1, g2), s in (pairs or {}).items():
            if not isinstance(s, int) or isinstance(s, bool) or s < 0:
                raise ValueError(f"strength of ({g1}, {g2}) must be a nonnegative integer")
            if NULL_GLUE in (g1, g2):
                if s != 0:
                    raise ValueError("the null glue cannot have positive strength")
                continue
            key = frozenset((g1, g2))
            if key in table and table[key] != s:
                raise ValueError(f"asymmetric strengths declared for ({g1}, {g2})")
            table[key] = s
        self._table = table

    def __call__(self, g1: str, g2: str) -> int:
        return self._table.get(frozenset((g1, g2)), 0)

    def pairs(self) -> List[Tuple[str, str, int]]:
        """Declared pairs as sorted ``(g1, g2, strength)`` with ``g1 <= g2``."""
        out = []
        for key, s in self._table.items():
            glues = sorted(key)
            out.append((glues[0], glues[-1], s))
        return sorted(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, StrengthFn) and self._table == other._table

    def __hash__(self) -> int:
        return hash(frozenset(self._table.items()))

    def __repr__(self) -> str:
        return f"StrengthFn({self.pairs()})"


class TileType(NamedTuple):
    name: str
    north: str = NULL_GLUE
    east: str = NULL_GLUE
    south: str = NULL_GLUE
    west: str = NULL_GLUE

    def glue(self, side: str) -> str:
        return {"N": self.north, "E": self.east, "S": self.south, "W": self.west}[side]


@dataclass(frozen=True)
class TileSystem:
    tiles: Tuple[TileType, ...]
    temperature: int
    strength: StrengthFn = field(default_factory=StrengthFn)

    def __post_init__(self):
        object.__setattr__(self, "tiles", tuple(self.tiles))
        if isinstance(self.temperature, bool) or not isinstance(self.temperature, int) \
                or self.temperature < 1:
            raise ValueError("temperature must be a positive integer")
        names = [t.name for t in self.tiles]
        if len(set(names)) != len(names):
            raise ValueError("tile names must be unique")
        if not names:
            raise ValueError("a tile system needs at least one tile type")

    @functools.cached_property
    def by_name(self) -> Dict[str, TileType]:
        return {t.name: t for t in self.tiles}

    @functools.cached_property
    def _bonds(self) -> Dict[Tuple[str, str, int, int], int]:
        # (name at p, name at p + d, dx, dy) -> strength, positive entries only
        bonds = {}
        for a in self.tiles:
            for b in self.tiles:
                for side, (dx, dy) in OFFSETS.items():
                    s = self.strength(a.glue(side), b.glue(OPPOSITE[side]))
                    if s:
                        bonds[a.name, b.name, dx, dy] = s
        return bonds

    def bond(self, name_p: str, name_q: str, d: Tuple[int, int]) -> int:
        """Strength between tile ``name_p`` at ``p`` and ``name_q`` at ``p + d``."""
        return self._bonds.get((name_p, name_q, d[0], d[1]), 0)

    def check_names(self, assembly: "Assembly") -> None:
        unknown = {n for n in assembly.placement.values() if n not in self.by_name}
        if unknown:
            raise KeyError(f"unknown tile type(s): {', '.join(sorted(unknown))}")


class Assembly:
    """A finite, nonempty, 4-connected placement of tile types."""

    __slots__ = ("placement", "_hash")

    def __init__(self, placement: Mapping, *, check: bool = True):
        self.placement: Dict[Point, str] = {Point(*p): name for p, name in placement.items()}
        self._hash = None
        if check:
            if not self.placement:
                raise ValueError("an assembly must be nonempty")
            if not is_connected(self.placement.keys()):
                raise ValueError("an assembly's domain must be 4-connected")

    @classmethod
    def single(cls, name: str, at=(0, 0)) -> "Assembly":
        return cls({at: name}, check=False)

    @property
    def domain(self) -> FrozenSet[Point]:
        return frozenset(self.placement)

    def __getitem__(self, p) -> str:
        return self.placement[Point(*p)]

    def __contains__(self, p) -> bool:
        return p in self.placement

    def __len__(self) -> int:
        return len(self.placement)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.placement)

    def items(self):
        return self.placement.items()

    def translate(self, v) -> "Assembly":
        dx, dy = v
        return Assembly({Point(x + dx, y + dy): n for (x, y), n in self.placement.items()},
                        check=False)

    def __eq__(self, other) -> bool:
        return isinstance(other, Assembly) and self.placement == other.placement

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.placement.items()))
        return self._hash

    def sorted_items(self) -> List[Tuple[Point, str]]:
        return sorted(self.placement.items(), key=lambda item: yx_key(item[0]))

    def __repr__(self) -> str:
        body = ", ".join(f"({p.x},{p.y}):{n}" for p, n in self.sorted_items())
        return f"Assembly({{{body}}})"


class BindingGraph(NamedTuple):
    nodes: FrozenSet[Point]
    edges: Dict[Tuple[Point, Point], int]  # keys ordered p < q

    def weight(self, p, q) -> int:
        p, q = Point(*p), Point(*q)
        return self.edges[(p, q) if p < q else (q, p)]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.nodes)
        for (p, q), w in self.edges.items():
            g.add_edge(p, q, weight=w)
        return g


def binding_graph(assembly: Assembly, system: TileSystem) -> BindingGraph:
    """Grid graph on the assembly's cells, weighted by abutting glue strength.

    Adjacent cells always get an edge, even when its weight is zero.
    """
    system.check_names(assembly)
    placement = assembly.placement
    edges = {}
    for p, name in placement.items():
        for d in ((1, 0), (0, 1)):
            q = Point(p.x + d[0], p.y + d[1])
            if q in placement:
                edges[(p, q)] = system.bond(name, placement[q], d)
    return BindingGraph(frozenset(placement), edges)


def min_cut_value(assembly: Assembly, system: TileSystem) -> Optional[int]:
    """Weight of a global minimum cut of the binding graph; None for one tile."""
    graph = binding_graph(assembly, system)
    if len(graph.nodes) < 2:
        return None
    value, _ = nx.stoer_wagner(graph.to_networkx())
    return value


def is_stable(assembly: Assembly, system: TileSystem) -> bool:
    """True iff every cut of the binding graph has weight at least the temperature."""
    value = min_cut_value(assembly, system)
    return value is None or value >= system.temperature


def consistent(a: Assembly, b: Assembly) -> bool:
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    other = big.placement
    return all(other.get(p, name) == name for p, name in small.placement.items())


def overlapping(a: Assembly, b: Assembly) -> bool:
    return not a.placement.keys().isdisjoint(b.placement.keys())


def union_assemblies(a: Assembly, b: Assembly) -> Assembly:
    if not consistent(a, b):
        raise ValueError("union is undefined: assemblies disagree on a shared point")
    merged = dict(a.placement)
    merged.update(b.placement)
    return Assembly(merged)


def restriction(assembly: Assembly, points: Iterable) -> Assembly:
    pts = {Point(*p) for p in points}
    missing = pts - assembly.placement.keys()
    if missing:
        raise ValueError(f"restriction points outside the domain: {sorted(missing)}")
    if not pts:
        raise ValueError("restriction to the empty set")
    if not is_connected(pts):
        raise ValueError("restriction domain is not connected")
    return Assembly({p: assembly.placement[p] for p in pts}, check=False)


def canonicalize(assembly: Assembly) -> Assembly:
    """Translate so the domain's minimum x and minimum y are both 0."""
    min_x = min(p.x for p in assembly.placement)
    min_y = min(p.y for p in assembly.placement)
    if min_x == 0 and min_y == 0:
        return assembly
    return assembly.translate((-min_x, -min_y))


def interface_strength(a: Assembly, b: Assembly, system: TileSystem) -> int:
    """Total bond strength across the cut between nonoverlapping ``a`` and ``b``."""
    pa = a.placement
    total = 0
    for q, name in b.placement.items():
        for dx, dy in NEIGHBOR_OFFSETS:
            p = (q[0] + dx, q[1] + dy)
            other = pa.get(p)
            if other is not None:
                total += system.bond(name, other, (dx, dy))
    return total


def attachments(a: Assembly, b: Assembly, system: TileSystem) -> Set[Vector]:
    """All shifts ``w`` such that ``b + w`` attaches stably to ``a``.

    ``b + w`` must not overlap ``a``, must touch it (which makes the union
    connected), and the summed strength of every bond across the interface
    must reach the temperature.
    """
    pa = a.placement
    pb = b.placement
    tau = system.temperature
    bonds = system._bonds
    candidates = {
        (ax + dx - bx, ay + dy - by)
        for (ax, ay) in pa
        for dx, dy in NEIGHBOR_OFFSETS
        for (bx, by) in pb
    }
    found = set()
    for wx, wy in candidates:
        total = 0
        for (bx, by), name in pb.items():
            qx, qy = bx + wx, by + wy
            if (qx, qy) in pa:
                total = -1
                break
            for dx, dy in NEIGHBOR_OFFSETS:
                other = pa.get((qx + dx, qy + dy))
                if other is not None:
                    total += bonds.get((name, other, dx, dy), 0)
        if total >= tau:
            found.add(Vector(wx, wy))
    return found


def _key(assembly: Assembly):
    return tuple(sorted((p.y, p.x, n) for p, n in assembly.placement.items()))


@functools.lru_cache(maxsize=32)
def _enumerate(system: TileSystem, max_size: int) -> FrozenSet[Assembly]:
    known: Dict[int, List[Assembly]] = {}
    seen: Set[Assembly] = set()
    queue: List[Assembly] = []

    def add(assembly: Assembly) -> None:
        if assembly not in seen:
            seen.add(assembly)
            known.setdefault(len(assembly), []).append(assembly)
            queue.append(assembly)

    for tile in system.tiles:
        add(Assembly.single(tile.name))
    # every pair is combined once: when the later of the two is dequeued
    while queue:
        a = queue.pop()
        room = max_size - len(a)
        for size in range(1, room + 1):
            for b in list(known.get(size, ())):
                for w in attachments(a, b, system):
                    merged = dict(a.placement)
                    for (x, y), n in b.placement.items():
                        merged[Point(x + w[0], y + w[1])] = n
                    add(canonicalize(Assembly(merged, check=False)))
    return frozenset(seen)


def enumerate_producible(system: TileSystem, max_size: int) -> FrozenSet[Assembly]:
    """Every producible assembly with at most ``max_size`` tiles, in canonical form."""
    if max_size < 1:
        raise ValueError("max_size must be positive")
    return _enumerate(system, max_size)


def is_terminal_bounded(assembly: Assembly, system: TileSystem, probe_size: int) -> bool:
    """True iff no producible assembly of at most ``probe_size`` tiles attaches.

    This only approximates terminality: larger attachers are not examined.
    """
    system.check_names(assembly)
    return not any(attachments(assembly, b, system)
                   for b in enumerate_producible(system, probe_size))


def sorted_assemblies(assemblies: Iterable[Assembly]) -> List[Assembly]:
    """Deterministic order: by size, then by sorted ``(y, x, name)`` content."""
    return sorted(assemblies, key=lambda a: (len(a), _key(a)))

