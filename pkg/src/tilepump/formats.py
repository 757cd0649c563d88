"""Line-based text formats for tile systems, assemblies, shapes and curves.

All formats ignore blank lines and ``#`` comments.  ``serialize_*`` always
writes the canonical layout, so parsing a canonical file and serializing
the result reproduces it byte for byte.

Tile system::

    temperature 2
    glue a 1              # same as: strength a a 1
    strength a b 2
    tile t0 N=a E=b S=null W=null

Assembly: ``place x y name`` lines.  Shape: ``cell x y`` lines.

Curves::

    curve phi
    v 0 0
    v 1/2 1/10
    system
    vector 1 0
    member phi 0 0 3/2    # curve name, base point, multiplier
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Tuple

from .curves import CurveSystem, PolyChain, RPoint, format_rational, rational
from .errors import FormatError
from .lattice import Shape, make_shape, yx_key
from .tiles import NULL_GLUE, Assembly, StrengthFn, TileSystem, TileType


def _lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body.split()


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"expected an integer, got {token!r}", lineno) from None


def _rat(token: str, lineno: int):
    try:
        return rational(token)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"expected a rational like 3 or -7/2, got {token!r}", lineno) from None


def _arity(tokens: List[str], n: int, lineno: int) -> None:
    if len(tokens) != n:
        raise FormatError(f"'{tokens[0]}' takes {n - 1} argument(s), got {len(tokens) - 1}", lineno)


# --- tile systems -----------------------------------------------------------


def parse_tile_system(text: str) -> TileSystem:
    temperature = None
    declared: Dict[frozenset, Tuple[int, int]] = {}
    pairs = {}
    tiles: List[TileType] = []
    for lineno, tok in _lines(text):
        word = tok[0]
        if word == "temperature":
            _arity(tok, 2, lineno)
            if temperature is not None:
                raise FormatError("temperature declared twice", lineno)
            temperature = _int(tok[1], lineno)
            if temperature < 1:
                raise FormatError("temperature must be positive", lineno)
        elif word in ("glue", "strength"):
            if word == "glue":
                _arity(tok, 3, lineno)
                g1 = g2 = tok[1]
                s = _int(tok[2], lineno)
            else:
                _arity(tok, 4, lineno)
                g1, g2 = tok[1], tok[2]
                s = _int(tok[3], lineno)
            if s < 0:
                raise FormatError("strengths must be nonnegative", lineno)
            if NULL_GLUE in (g1, g2) and s:
                raise FormatError("the null glue cannot have positive strength", lineno)
            key = frozenset((g1, g2))
            if key in declared and declared[key][0] != s:
                raise FormatError(
                    f"conflicting strengths for ({g1}, {g2}); first declared on line "
                    f"{declared[key][1]} (strengths must be symmetric)", lineno)
            declared[key] = (s, lineno)
            pairs[(g1, g2)] = s
        elif word == "tile":
            if len(tok) < 2:
                raise FormatError("tile needs a name", lineno)
            sides = {"N": NULL_GLUE, "E": NULL_GLUE, "S": NULL_GLUE, "W": NULL_GLUE}
            seen = set()
            for item in tok[2:]:
                side, eq, glue = item.partition("=")
                if not eq or side not in sides or not glue:
                    raise FormatError(f"bad side spec {item!r}; use N=, E=, S= or W=", lineno)
                if side in seen:
                    raise FormatError(f"side {side} given twice", lineno)
                seen.add(side)
                sides[side] = glue
            if any(t.name == tok[1] for t in tiles):
                raise FormatError(f"duplicate tile name {tok[1]!r}", lineno)
            tiles.append(TileType(tok[1], sides["N"], sides["E"], sides["S"], sides["W"]))
        else:
            raise FormatError(f"unknown directive {word!r}", lineno)
    if temperature is None:
        raise FormatError("missing 'temperature' line")
    if not tiles:
        raise FormatError("no tile types declared")
    pairs = {k: s for k, s in pairs.items() if NULL_GLUE not in k}
    return TileSystem(tuple(tiles), temperature, StrengthFn(pairs))


def serialize_tile_system(system: TileSystem) -> str:
    out = [f"temperature {system.temperature}"]
    for g1, g2, s in system.strength.pairs():
        out.append(f"glue {g1} {s}" if g1 == g2 else f"strength {g1} {g2} {s}")
    for t in system.tiles:
        out.append(f"tile {t.name} N={t.north} E={t.east} S={t.south} W={t.west}")
    return "\n".join(out) + "\n"


# --- assemblies and shapes --------------------------------------------------


def parse_assembly(text: str) -> Assembly:
    placement = {}
    for lineno, tok in _lines(text):
        if tok[0] != "place":
            raise FormatError(f"unknown directive {tok[0]!r}; expected 'place x y name'", lineno)
        _arity(tok, 4, lineno)
        p = (_int(tok[1], lineno), _int(tok[2], lineno))
        if p in placement:
            raise FormatError(f"position {p} placed twice", lineno)
        placement[p] = tok[3]
    try:
        return Assembly(placement)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def serialize_assembly(assembly: Assembly) -> str:
    return "".join(f"place {p.x} {p.y} {name}\n" for p, name in assembly.sorted_items())


def parse_shape(text: str) -> Shape:
    cells = set()
    for lineno, tok in _lines(text):
        if tok[0] != "cell":
            raise FormatError(f"unknown directive {tok[0]!r}; expected 'cell x y'", lineno)
        _arity(tok, 3, lineno)
        p = (_int(tok[1], lineno), _int(tok[2], lineno))
        if p in cells:
            raise FormatError(f"cell {p} listed twice", lineno)
        cells.add(p)
    try:
        return make_shape(cells)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def serialize_shape(shape) -> str:
    return "".join(f"cell {p[0]} {p[1]}\n" for p in sorted(shape, key=yx_key))


# --- curves -----------------------------------------------------------------


@dataclass
class CurveFile:
    curves: Dict[str, PolyChain] = field(default_factory=dict)
    systems: List[Tuple[Tuple[str, ...], CurveSystem]] = field(default_factory=list)


def parse_curves(text: str) -> CurveFile:
    result = CurveFile()
    pending: Dict[str, Tuple[int, list]] = {}
    order: List[str] = []
    raw_systems = []
    block = None  # ("curve", name) or ("system", record)
    for lineno, tok in _lines(text):
        word = tok[0]
        if word == "curve":
            _arity(tok, 2, lineno)
            if tok[1] in pending:
                raise FormatError(f"curve {tok[1]!r} defined twice", lineno)
            pending[tok[1]] = (lineno, [])
            order.append(tok[1])
            block = ("curve", tok[1])
        elif word == "v":
            if block is None or block[0] != "curve":
                raise FormatError("vertex outside a curve block", lineno)
            _arity(tok, 3, lineno)
            pending[block[1]][1].append(RPoint(_rat(tok[1], lineno), _rat(tok[2], lineno)))
        elif word == "system":
            _arity(tok, 1, lineno)
            record = {"line": lineno, "vector": None, "members": []}
            raw_systems.append(record)
            block = ("system", record)
        elif word == "vector":
            if block is None or block[0] != "system":
                raise FormatError("'vector' outside a system block", lineno)
            _arity(tok, 3, lineno)
            if block[1]["vector"] is not None:
                raise FormatError("system vector given twice", lineno)
            block[1]["vector"] = (_rat(tok[1], lineno), _rat(tok[2], lineno))
        elif word == "member":
            if block is None or block[0] != "system":
                raise FormatError("'member' outside a system block", lineno)
            _arity(tok, 5, lineno)
            block[1]["members"].append(
                (tok[1], RPoint(_rat(tok[2], lineno), _rat(tok[3], lineno)),
                 _rat(tok[4], lineno), lineno))
        else:
            raise FormatError(f"unknown directive {word!r}", lineno)
    for name in order:
        lineno, vertices = pending[name]
        try:
            result.curves[name] = PolyChain(vertices)
        except ValueError as exc:
            raise FormatError(f"curve {name!r}: {exc}", lineno) from None
    for record in raw_systems:
        if record["vector"] is None:
            raise FormatError("system has no 'vector' line", record["line"])
        if not record["members"]:
            raise FormatError("system has no members", record["line"])
        for name, _, _, lineno in record["members"]:
            if name not in result.curves:
                raise FormatError(f"unknown curve {name!r}", lineno)
        names = tuple(m[0] for m in record["members"])
        try:
            system = CurveSystem(
                tuple(result.curves[n] for n in names),
                tuple(m[1] for m in record["members"]),
                tuple(m[2] for m in record["members"]),
                record["vector"],
            )
        except ValueError as exc:
            raise FormatError(str(exc), record["line"]) from None
        result.systems.append((names, system))
    return result


def serialize_curves(data: CurveFile) -> str:
    out = []
    for name, chain in data.curves.items():
        out.append(f"curve {name}")
        out.extend(f"v {format_rational(p.x)} {format_rational(p.y)}" for p in chain.vertices)
    for names, system in data.systems:
        out.append("system")
        out.append(f"vector {format_rational(system.v.x)} {format_rational(system.v.y)}")
        for name, p, n in zip(names, system.base_points, system.multipliers):
            out.append(f"member {name} {format_rational(p.x)} {format_rational(p.y)} "
                       f"{format_rational(n)}")
    return "\n".join(out) + "\n"


def sniff(text: str) -> str:
    """Guess a file's kind from its first directive."""
    for lineno, tok in _lines(text):
        kinds = {"place": "assembly", "cell": "shape", "curve": "curves",
                 "temperature": "tiles", "tile": "tiles", "glue": "tiles",
                 "strength": "tiles"}
        if tok[0] in kinds:
            return kinds[tok[0]]
        raise FormatError(f"cannot tell the file kind from directive {tok[0]!r}", lineno)
    raise FormatError("empty file")
