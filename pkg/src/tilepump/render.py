"""Deterministic SVG drawings of assemblies, shapes, tile sets and curves.

Output depends only on the input values: iteration is always sorted,
numbers are printed with fixed precision, and colors come from an MD5 of
the item's name rather than Python's salted ``hash``.
"""

from __future__ import annotations

import hashlib
from typing import Dict, Iterable, List, Optional, Tuple
from xml.sax.saxutils import escape

from .curves import PolyChain
from .lattice import yx_key
from .tiles import Assembly, TileSystem

CELL = 40
MARGIN = 20
PALETTE = (
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
    "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
)


def color_for(name: str) -> str:
    digest = hashlib.md5(name.encode("utf-8")).digest()
    return PALETTE[digest[0] % len(PALETTE)]


def _num(value) -> str:
    text = f"{float(value):.3f}".rstrip("0").rstrip(".")
    return "0" if text == "-0" else text


def _document(width: float, height: float, body: List[str]) -> str:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(width)}" height="{_num(height)}" '
        f'viewBox="0 0 {_num(width)} {_num(height)}">\n'
    )
    return head + "".join(line + "\n" for line in body) + "</svg>\n"


def _grid_frame(cells: Iterable[Tuple[int, int]]):
    cells = list(cells)
    min_x = min(p[0] for p in cells)
    max_x = max(p[0] for p in cells)
    min_y = min(p[1] for p in cells)
    max_y = max(p[1] for p in cells)
    width = (max_x - min_x + 1) * CELL + 2 * MARGIN
    height = (max_y - min_y + 1) * CELL + 2 * MARGIN

    def corner(p):
        # svg y grows downward
        return MARGIN + (p[0] - min_x) * CELL, MARGIN + (max_y - p[1]) * CELL

    return width, height, corner


def _glue_strengths(system: TileSystem) -> Dict[str, int]:
    best: Dict[str, int] = {}
    for g1, g2, s in system.strength.pairs():
        best[g1] = max(best.get(g1, 0), s)
        best[g2] = max(best.get(g2, 0), s)
    return best


def _ticks(x: float, y: float, side: str, count: int) -> List[str]:
    out = []
    count = min(count, 4)
    for k in range(count):
        offset = CELL * (k + 1) / (count + 1)
        if side == "N":
            x1, y1, x2, y2 = x + offset, y, x + offset, y + 6
        elif side == "S":
            x1, y1, x2, y2 = x + offset, y + CELL, x + offset, y + CELL - 6
        elif side == "W":
            x1, y1, x2, y2 = x, y + offset, x + 6, y + offset
        else:
            x1, y1, x2, y2 = x + CELL, y + offset, x + CELL - 6, y + offset
        out.append(f'<line x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" y2="{_num(y2)}" '
                   f'stroke="#000" stroke-width="2"/>')
    return out


def _tile_body(x: float, y: float, name: str, glues: Optional[Dict[str, str]],
               strengths: Dict[str, int]) -> List[str]:
    out = [
        f'<rect x="{_num(x)}" y="{_num(y)}" width="{CELL}" height="{CELL}" '
        f'fill="{color_for(name)}" stroke="#222" stroke-width="1"/>',
        f'<text x="{_num(x + CELL / 2)}" y="{_num(y + CELL / 2 + 4)}" font-size="11" '
        f'text-anchor="middle" font-family="monospace">{escape(name)}</text>',
    ]
    if glues:
        for side in ("N", "E", "S", "W"):
            out.extend(_ticks(x, y, side, strengths.get(glues[side], 0)))
    return out


def render_assembly(assembly: Assembly, system: Optional[TileSystem] = None) -> str:
    width, height, corner = _grid_frame(assembly.placement)
    strengths = _glue_strengths(system) if system else {}
    body = []
    for p, name in assembly.sorted_items():
        x, y = corner(p)
        glues = None
        if system is not None and name in system.by_name:
            t = system.by_name[name]
            glues = {"N": t.north, "E": t.east, "S": t.south, "W": t.west}
        body.extend(_tile_body(x, y, name, glues, strengths))
    return _document(width, height, body)


def render_tile_system(system: TileSystem) -> str:
    strengths = _glue_strengths(system)
    width = len(system.tiles) * (CELL + 10) - 10 + 2 * MARGIN
    height = CELL + 2 * MARGIN
    body = []
    for i, t in enumerate(system.tiles):
        x = MARGIN + i * (CELL + 10)
        glues = {"N": t.north, "E": t.east, "S": t.south, "W": t.west}
        body.extend(_tile_body(x, MARGIN, t.name, glues, strengths))
    return _document(width, height, body)


def render_shape(shape, fill: str = "#4e79a7") -> str:
    width, height, corner = _grid_frame(shape)
    body = []
    for p in sorted(shape, key=yx_key):
        x, y = corner(p)
        body.append(f'<rect x="{_num(x)}" y="{_num(y)}" width="{CELL}" height="{CELL}" '
                    f'fill="{fill}" stroke="#222" stroke-width="1"/>')
    return _document(width, height, body)


def render_curves(curves: Dict[str, PolyChain]) -> str:
    pts = [p for chain in curves.values() for p in chain.vertices]
    min_x = min(p.x for p in pts)
    max_x = max(p.x for p in pts)
    min_y = min(p.y for p in pts)
    max_y = max(p.y for p in pts)
    scale = CELL
    width = float(max_x - min_x) * scale + 2 * MARGIN
    height = float(max_y - min_y) * scale + 2 * MARGIN
    body = []
    for name in sorted(curves):
        chain = curves[name]
        coords = " ".join(
            f"{_num(MARGIN + (p.x - min_x) * scale)},{_num(MARGIN + (max_y - p.y) * scale)}"
            for p in chain.vertices
        )
        body.append(f'<polyline points="{coords}" fill="none" stroke="{color_for(name)}" '
                    f'stroke-width="2"><title>{escape(name)}</title></polyline>')
    return _document(width, height, body)
