"""Command-line front end.

Exit codes: 0 when the command succeeds or the checked property holds,
1 for a negative result (unstable, no repetition, condition fails), and
2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional

from . import formats
from .curves import (
    CurveSystem,
    RPoint,
    ReductionError,
    find_violation,
    format_rational,
    gen_noninteger_example,
    rational,
    validate_curve_system,
)
from .errors import FormatError, TheoremViolation
from .lattice import find_nonconflicting_component, require_nonzero, shape_walk, yx_key
from .pumping import certify_producible_small, find_repetitions, pump
from .render import render_assembly, render_curves, render_shape, render_tile_system
from .tiles import enumerate_producible, min_cut_value, sorted_assemblies


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str, parser):
    try:
        return parser(_read(path))
    except FormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _vec(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected dx,dy, got {text!r}")
    try:
        v = (int(parts[0]), int(parts[1]))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers dx,dy, got {text!r}") from None
    if v == (0, 0):
        raise argparse.ArgumentTypeError("vector must be nonzero")
    return v


def _rat(text: str):
    try:
        return rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected NUM or NUM/DEN, got {text!r}") from None


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return n


def _cells(shape) -> str:
    return " ".join(f"({p[0]},{p[1]})" for p in sorted(shape, key=yx_key))


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


# --- subcommands --------------------------------------------------------------


def cmd_enumerate(args, out) -> int:
    system = _load(args.system, formats.parse_tile_system)
    found = sorted_assemblies(enumerate_producible(system, args.max_size))
    if args.out:
        os.makedirs(args.out, exist_ok=True)
    for i, a in enumerate(found):
        cells = " ".join(f"{p.x},{p.y}:{name}" for p, name in a.sorted_items())
        print(f"[{i}] size {len(a)}: {cells}", file=out)
        if args.out:
            _write(os.path.join(args.out, f"assembly_{i:05d}.txt"), formats.serialize_assembly(a))
    print(f"count {len(found)}", file=out)
    return 0


def cmd_stable(args, out) -> int:
    system = _load(args.system, formats.parse_tile_system)
    assembly = _load(args.assembly, formats.parse_assembly)
    try:
        system.check_names(assembly)
    except KeyError as exc:
        raise UsageError(f"{args.assembly}: {exc.args[0]}") from None
    cut = min_cut_value(assembly, system)
    tau = system.temperature
    if cut is None:
        print(f"stable: single tile, no cut (τ={tau})", file=out)
        return 0
    if cut >= tau:
        print(f"stable: min cut {cut} >= τ={tau}", file=out)
        return 0
    print(f"unstable: min cut {cut} < τ={tau}", file=out)
    return 1


def cmd_repetitions(args, out) -> int:
    assembly = _load(args.assembly, formats.parse_assembly)
    reps = find_repetitions(assembly)
    for r in reps:
        print(f"v {r.v.dx},{r.v.dy} overlap {len(r.overlap)}", file=out)
    if not reps:
        print("no repetition vectors", file=out)
        return 1
    return 0


def cmd_pump(args, out) -> int:
    system = _load(args.system, formats.parse_tile_system)
    assembly = _load(args.assembly, formats.parse_assembly)
    try:
        system.check_names(assembly)
        trace = pump(assembly, args.vec, args.iters, system)
    except KeyError as exc:
        raise UsageError(f"{args.assembly}: {exc.args[0]}") from None
    except ValueError as exc:
        print(f"cannot pump: {exc}", file=out)
        return 1
    v = trace.v
    print(f"start size {len(assembly)} v {v.dx},{v.dy}", file=out)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
    for i, step in enumerate(trace.iterations, start=1):
        a = step.assembly
        if args.certify_bound and len(a) <= args.certify_bound:
            ok = certify_producible_small(a, system, args.certify_bound)
            evidence = "certified by enumeration" if ok else "NOT FOUND by enumeration"
            if not ok:
                raise TheoremViolation(f"iterate {i} missing from bounded enumeration")
        else:
            evidence = "producible by the union theorem (stability and consistency checked)"
        print(f"iter {i} size {len(a)} v {v.dx},{v.dy} |C1| {len(step.added)} stable yes; {evidence}",
              file=out)
        if args.out:
            _write(os.path.join(args.out, f"iterate_{i:03d}.txt"), formats.serialize_assembly(a))
    return 0


def cmd_shape_component(args, out) -> int:
    shape = _load(args.shape, formats.parse_shape)
    comp = find_nonconflicting_component(shape, args.vec)
    print(f"component {_cells(comp)}", file=out)
    return 0


def cmd_shape_walk(args, out) -> int:
    shape = _load(args.shape, formats.parse_shape)
    trace = shape_walk(shape, args.vec)
    for i, step in enumerate(trace.steps):
        a = step.anchor
        print(f"step {i} anchor ({a[0]},{a[1]}) n {step.exit_multiplier} component {_cells(step.component)}",
              file=out)
    print(f"final {_cells(trace.final_component)}", file=out)
    return 0


def _systems(path: str):
    data = _load(path, formats.parse_curves)
    if not data.systems:
        raise UsageError(f"{path}: no 'system' block")
    return data.systems


def cmd_curves_check(args, out) -> int:
    holds = True
    for idx, (names, system) in enumerate(_systems(args.file)):
        report = validate_curve_system(system)
        print(f"system {idx} ({', '.join(names)}):", file=out)
        for c in (1, 2, 3):
            verdict = "holds" if report.holds(c) else "fails"
            print(f"  condition {c}: {verdict}", file=out)
        holds = holds and report.all_hold
    return 0 if holds else 1


def cmd_curves_violate(args, out) -> int:
    status = 0
    for idx, (names, system) in enumerate(_systems(args.file)):
        try:
            w = find_violation(system, mode=args.mode)
        except (ReductionError, ValueError) as exc:
            print(f"system {idx}: {exc}", file=out)
            status = 1
            continue
        p = w.point
        print(f"system {idx}: {w.kind} curves {names[w.i]},{names[w.j]} shift {w.shift} "
              f"point ({format_rational(p.x)},{format_rational(p.y)}) route {w.route}", file=out)
    return status


def cmd_curves_example(args, out) -> int:
    try:
        chain = gen_noninteger_example(args.x, args.eps)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    system = CurveSystem((chain,), (RPoint(0, 0),), (args.x,), (1, 0))
    data = formats.CurveFile({"phi": chain}, [(("phi",), system)])
    out.write(formats.serialize_curves(data))
    return 0


def cmd_render(args, out) -> int:
    text = _read(args.input)
    try:
        kind = formats.sniff(text)
        if kind == "assembly":
            system = _load(args.system, formats.parse_tile_system) if args.system else None
            svg = render_assembly(formats.parse_assembly(text), system)
        elif kind == "shape":
            svg = render_shape(formats.parse_shape(text))
        elif kind == "curves":
            svg = render_curves(formats.parse_curves(text).curves)
        else:
            svg = render_tile_system(formats.parse_tile_system(text))
    except FormatError as exc:
        raise UsageError(f"{args.input}: {exc}") from None
    _write(args.svg, svg)
    print(f"wrote {kind} rendering to {args.svg}", file=out)
    return 0


# --- argument parsing ---------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tilepump", description="Pumping tools for two-handed tile assembly.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="list producible assemblies up to a size")
    p.add_argument("--system", required=True)
    p.add_argument("--max-size", type=_positive, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("stable", help="check τ-stability")
    p.add_argument("--system", required=True)
    p.add_argument("--assembly", required=True)
    p.set_defaults(func=cmd_stable)

    p = sub.add_parser("repetitions", help="list repetition vectors")
    p.add_argument("--assembly", required=True)
    p.set_defaults(func=cmd_repetitions)

    p = sub.add_parser("pump", help="pump a repetitious assembly")
    p.add_argument("--system", required=True)
    p.add_argument("--assembly", required=True)
    p.add_argument("--vec", type=_vec, required=True)
    p.add_argument("--iters", type=_positive, required=True)
    p.add_argument("--certify-bound", type=_positive)
    p.add_argument("--out")
    p.set_defaults(func=cmd_pump)

    for name, func, help_text in (
        ("shape-component", cmd_shape_component, "component of S2 minus S1 missing S0"),
        ("shape-walk", cmd_shape_walk, "trace the constructive component walk"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--shape", required=True)
        p.add_argument("--vec", type=_vec, required=True)
        p.set_defaults(func=func)

    curves = sub.add_parser("curves", help="curve-system tools")
    csub = curves.add_subparsers(dest="curves_command", required=True, parser_class=_Parser)
    p = csub.add_parser("check", help="report the three conditions")
    p.add_argument("--file", required=True)
    p.set_defaults(func=cmd_curves_check)
    p = csub.add_parser("violate", help="find a violated condition")
    p.add_argument("--file", required=True)
    p.add_argument("--mode", choices=("direct", "reduce"), default="reduce")
    p.set_defaults(func=cmd_curves_violate)
    p = csub.add_parser("example", help="curve disjoint from its unit shift")
    p.add_argument("--x", type=_rat, required=True)
    p.add_argument("--eps", type=_rat, required=True)
    p.set_defaults(func=cmd_curves_example)

    p = sub.add_parser("render", help="write an SVG drawing")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--svg", required=True)
    p.add_argument("--system", help="tile system, for glue ticks on assemblies")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
