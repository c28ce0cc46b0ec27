"""Command-line interface.

Exit codes: 0 success, 1 invalid input, 2 illegal move, 3 budget exhausted,
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from ..cubediag import CubeDiagram, FlatRef, commute, destabilize, num_components, project_cube, stabilize, validate_cube
from ..errors import (
    BudgetExhausted,
    ConstraintCycle,
    CubeKnotError,
    IllegalMove,
    InvalidInput,
    InvariantViolation,
    ParseError,
    SurgeryFailed,
)
from ..floer import homology_table
from ..griddiag import OrientedGridDiagram, commute_cols, commute_rows, cyclic_permute, validate_grid
from ..griddiag import destabilize as grid_destabilize
from ..griddiag import stabilize as grid_stabilize
from ..lifting import lift_grid
from .io import parse, serialize
from .render import render_svg

EXIT_OK, EXIT_INVALID, EXIT_ILLEGAL, EXIT_BUDGET, EXIT_INVARIANT = 0, 1, 2, 3, 4


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(path: str, kind=None):
    d = parse(path)
    if kind is not None and not isinstance(d, kind):
        want = "cube" if kind is CubeDiagram else "grid"
        raise InvalidInput(f"{path}: expected a {want} file")
    return d


def cmd_validate(args) -> int:
    try:
        d = parse(args.file)
    except InvalidInput as e:
        print("invalid")
        for p in e.problems:
            print(f"  {p}")
        return EXIT_INVALID
    kind = "cube" if isinstance(d, CubeDiagram) else "grid"
    comps = num_components(d) if isinstance(d, CubeDiagram) else d.num_components()
    problems = validate_cube(d) if isinstance(d, CubeDiagram) else validate_grid(d)
    assert not problems
    print(f"valid {kind} n={d.n} components={comps}")
    return EXIT_OK


def cmd_project(args) -> int:
    cube = _load(args.file, CubeDiagram)
    _emit(serialize(project_cube(cube, args.plane)), args.output)
    return EXIT_OK


def cmd_lift(args) -> int:
    G = _load(args.file, OrientedGridDiagram)
    cube, report = lift_grid(G, budget=args.budget, surgery=not args.no_surgery)
    _emit(serialize(cube), args.output)
    stream = sys.stdout if args.output else sys.stderr
    for line in report.lines():
        print(f"# {line}", file=stream)
    return EXIT_OK


def cmd_move(args) -> int:
    d = _load(args.file)
    chosen = [k for k in ("stabilize", "destabilize", "commute", "cyclic") if getattr(args, k) is not None]
    if len(chosen) != 1:
        raise InvalidInput("give exactly one of --stabilize, --destabilize, --commute, --cyclic")
    kind = chosen[0]
    vals = getattr(args, kind)
    try:
        if isinstance(d, CubeDiagram):
            if kind == "cyclic":
                raise InvalidInput("--cyclic applies to grid files only")
            if kind == "commute":
                axis, k = vals[0], int(vals[1])
                out = commute(d, FlatRef.of(axis, k))
            else:
                t, i = vals[0].upper(), int(vals[1])
                if t not in ("X", "Y", "Z"):
                    raise InvalidInput(f"marking type must be X, Y or Z, not {vals[0]!r}")
                out = (stabilize if kind == "stabilize" else destabilize)(d, t, i)
        else:
            if kind == "stabilize":
                out = grid_stabilize(d, int(vals[0]), *(vals[1:3]))
            elif kind == "destabilize":
                out = grid_destabilize(d, int(vals[0]))
            elif kind == "commute":
                out = (commute_rows if vals[0] == "rows" else commute_cols)(d, int(vals[1]))
            else:
                out = cyclic_permute(d, int(vals[1]), vals[0])
    except (IndexError, ValueError) as e:
        raise InvalidInput(f"bad move arguments {vals}: {e}") from None
    _emit(serialize(out), args.output)
    return EXIT_OK


def cmd_homology(args) -> int:
    cube = _load(args.file, CubeDiagram)
    _emit(homology_table(cube, args.axis, args.variant, args.normalize).to_text(), args.output)
    return EXIT_OK


def cmd_gridhomology(args) -> int:
    G = _load(args.file, OrientedGridDiagram)
    _emit(homology_table(G, None, args.variant, args.normalize).to_text(), args.output)
    return EXIT_OK


def cmd_render(args) -> int:
    d = _load(args.file)
    svg = render_svg(d, args.plane)  # render fully before touching the output
    _emit(svg, args.output)
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .selftest import run

    run(full=args.full)
    print("selftest passed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cubeknot", description="Cube and grid diagrams of links.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a grid or cube file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("project", help="project a cube onto a coordinate plane")
    p.add_argument("file")
    p.add_argument("--plane", default="xy", choices=["xy", "yz", "zx"])
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("lift", help="lift a grid to a cube diagram")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=None, help="stack orderings to try per stage")
    p.add_argument("--no-surgery", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("move", help="apply one move to a grid or cube file")
    p.add_argument("file")
    p.add_argument("--stabilize", nargs="+", metavar="ARG", help="cube: TYPE INDEX; grid: ROW [X|O] [lower|upper]")
    p.add_argument("--destabilize", nargs="+", metavar="ARG", help="cube: TYPE INDEX; grid: COLUMN")
    p.add_argument("--commute", nargs=2, metavar=("AXIS", "K"), help="cube: x|y|z K; grid: rows|cols K")
    p.add_argument("--cyclic", nargs=2, metavar=("DIR", "SHIFT"), help="grid only: rows|cols SHIFT")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_move)

    p = sub.add_parser("homology", help="cube homology Poincare table")
    p.add_argument("file")
    p.add_argument("--axis", default="y", choices=["x", "y", "z"])
    p.add_argument("--variant", default="tilde", choices=["tilde", "filtered-hat"])
    p.add_argument("--normalize", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("gridhomology", help="grid homology Poincare table")
    p.add_argument("file")
    p.add_argument("--variant", default="tilde", choices=["tilde", "filtered-hat"])
    p.add_argument("--normalize", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gridhomology)

    p = sub.add_parser("render", help="draw a projection as SVG")
    p.add_argument("file")
    p.add_argument("--plane", default=None, choices=["xy", "yz", "zx"])
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("selftest", help="run the invariant checks")
    p.add_argument("--full", action="store_true", help="include the slower exhaustive checks")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InvalidInput, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        for p in getattr(e, "problems", [])[:20]:
            print(f"  {p}", file=sys.stderr)
        return EXIT_INVALID
    except IllegalMove as e:
        print(f"illegal move: {e}", file=sys.stderr)
        return EXIT_ILLEGAL
    except (BudgetExhausted, ConstraintCycle, SurgeryFailed) as e:
        print(f"budget exhausted: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (InvariantViolation, AssertionError) as e:
        print(f"invariant violation: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    except CubeKnotError as e:  # pragma: no cover - every subclass is handled above
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
