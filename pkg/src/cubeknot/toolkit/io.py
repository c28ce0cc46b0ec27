"""Text formats for grid and cube diagrams.

Grid files::

    gridknot v1
    n <N>
    orient <xy|yz|zx>
    X <c_0> ... <c_{N-1}>
    O <c_0> ... <c_{N-1}>

Cube files::

    cubeknot v1
    n <N>
    X <x> <y> <z>      (N lines, then N Y lines, then N Z lines)

Blank lines and ``#`` comments are ignored.  Cubes are written in canonical
traversal order.
"""

from __future__ import annotations

import os
from typing import Union

from ..cubediag import CubeDiagram, canonicalize, validate_cube
from ..errors import ParseError, ValidationError
from ..griddiag import OrientedGridDiagram, validate_grid
from ..lattice import Plane

Diagram = Union[CubeDiagram, OrientedGridDiagram]


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _ints(tokens, no) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", no) from None


def _size(it) -> int:
    try:
        no, toks = next(it)
    except StopIteration:
        raise ParseError("missing 'n' line") from None
    if toks[0] != "n" or len(toks) != 2:
        raise ParseError("expected 'n <N>'", no)
    (n,) = _ints(toks[1:], no)
    if n < 1:
        raise ParseError(f"size must be positive, got {n}", no)
    return n


def parse_text(text: str) -> Diagram:
    it = _lines(text)
    try:
        no, toks = next(it)
    except StopIteration:
        raise ParseError("empty file") from None
    header = " ".join(toks)
    if header == "gridknot v1":
        return _parse_grid(it)
    if header == "cubeknot v1":
        return _parse_cube(it)
    raise ParseError(f"unknown header {header!r}; expected 'gridknot v1' or 'cubeknot v1'", no)


def _parse_grid(it) -> OrientedGridDiagram:
    n = _size(it)
    fields: dict = {}
    last = 0
    for no, toks in it:
        last = no
        key = toks[0]
        if key in fields:
            raise ParseError(f"duplicate {key!r} line", no)
        if key == "orient":
            if len(toks) != 2:
                raise ParseError("expected 'orient <xy|yz|zx>'", no)
            try:
                fields[key] = (Plane.parse(toks[1]), no)
            except ValueError as e:
                raise ParseError(str(e), no) from None
        elif key in ("X", "O"):
            vals = _ints(toks[1:], no)
            if len(vals) != n:
                raise ParseError(f"{key} line needs {n} columns, got {len(vals)}", no)
            bad = [v for v in vals if not 0 <= v < n]
            if bad:
                raise ParseError(f"{key} column {bad[0]} outside [0,{n})", no)
            if len(set(vals)) != n:
                raise ParseError(f"{key} columns are not a permutation (row/column multiplicity)", no)
            fields[key] = (vals, no)
        else:
            raise ParseError(f"unexpected line {key!r}", no)
    for key in ("orient", "X", "O"):
        if key not in fields:
            raise ParseError(f"missing {key!r} line", last or None)
    G = OrientedGridDiagram(fields["X"][0], fields["O"][0], fields["orient"][0])
    problems = validate_grid(G)
    if problems:
        raise ValidationError("; ".join(map(str, problems)), problems)
    return G


def _parse_cube(it) -> CubeDiagram:
    n = _size(it)
    fam: dict[str, list] = {"X": [], "Y": [], "Z": []}
    order = "XYZ"
    stage = 0
    for no, toks in it:
        key = toks[0]
        if key not in fam:
            raise ParseError(f"unexpected line {key!r}", no)
        if order.index(key) < stage:
            raise ParseError(f"{key} line after {order[stage]} lines", no)
        stage = order.index(key)
        vals = _ints(toks[1:], no)
        if len(vals) != 3:
            raise ParseError(f"{key} line needs 3 coordinates", no)
        if not all(0 <= v < n for v in vals):
            raise ParseError(f"cell {tuple(vals)} outside [0,{n})^3", no)
        fam[key].append(tuple(vals))
        if len(fam[key]) > n:
            raise ParseError(f"more than {n} {key} lines", no)
    for key in order:
        if len(fam[key]) != n:
            raise ParseError(f"expected {n} {key} lines, got {len(fam[key])}")
    cube = CubeDiagram(fam["X"], fam["Y"], fam["Z"])
    problems = validate_cube(cube)
    if problems:
        raise ValidationError("; ".join(map(str, problems)), problems)
    return canonicalize(cube)


def parse(path: str | os.PathLike) -> Diagram:
    with open(path, encoding="utf-8") as fh:
        return parse_text(fh.read())


def serialize(diagram: Diagram) -> str:
    if isinstance(diagram, OrientedGridDiagram):
        o = Plane.parse(diagram.orientation).value
        return (
            f"gridknot v1\nn {diagram.n}\norient {o}\n"
            f"X {' '.join(map(str, diagram.xpos))}\n"
            f"O {' '.join(map(str, diagram.opos))}\n"
        )
    if isinstance(diagram, CubeDiagram):
        cube = canonicalize(diagram)
        lines = ["cubeknot v1", f"n {cube.n}"]
        for t in "XYZ":
            lines += [f"{t} {c[0]} {c[1]} {c[2]}" for c in cube.family(t)]
        return "\n".join(lines) + "\n"
    raise TypeError(f"cannot serialize {type(diagram).__name__}")


def write(diagram: Diagram, path: str | os.PathLike) -> None:
    text = serialize(diagram)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
