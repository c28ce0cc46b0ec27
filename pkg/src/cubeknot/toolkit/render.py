"""SVG drawings of grid diagrams and cube projections.

Row segments pass under column segments, so each row segment is drawn in
pieces with a gap at every crossing.  Each gap is also emitted as an
invisible ``<rect class="gap">`` so drawings can be audited.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from ..cubediag import GRID_X_FAMILY, CubeDiagram, project_cube, validate_cube
from ..errors import InvalidInput
from ..griddiag import OrientedGridDiagram, col_span, crossings, row_span, validate_grid
from ..lattice import Plane

CELL = 40
GAP = 10


@dataclass
class RenderScene:
    n: int
    cell: int
    over: list = field(default_factory=list)  # (x1, y1, x2, y2)
    under: list = field(default_factory=list)
    gaps: list = field(default_factory=list)  # (cx, cy)
    glyphs: list = field(default_factory=list)  # (cx, cy, label, kind)
    title: str = ""


def build_scene(G: OrientedGridDiagram, x_label: str = "X", o_label: str = "O", cell: int = CELL) -> RenderScene:
    n = G.n
    sc = RenderScene(n, cell, title=f"{Plane.parse(G.orientation).value} projection, n={n}")

    def cx(c):
        return (c + 0.5) * cell

    def cy(r):  # rows run bottom to top
        return (n - r - 0.5) * cell

    by_row: dict[int, list[int]] = {}
    for c, r in crossings(G):
        by_row.setdefault(r, []).append(c)
        sc.gaps.append((cx(c), cy(r)))
    xrow, orow = G.x_row_of_col(), G.o_row_of_col()
    for c in range(n):
        lo, hi = col_span(G, c, xrow, orow)
        sc.over.append((cx(c), cy(lo), cx(c), cy(hi)))
    for r in range(n):
        lo, hi = row_span(G, r)
        start = cx(lo)
        for c in sorted(by_row.get(r, [])):
            sc.under.append((start, cy(r), cx(c) - GAP / 2, cy(r)))
            start = cx(c) + GAP / 2
        sc.under.append((start, cy(r), cx(hi), cy(r)))
        sc.glyphs.append((cx(G.xpos[r]), cy(r), x_label, "x"))
        sc.glyphs.append((cx(G.opos[r]), cy(r), o_label, "o"))
    return sc


def scene_to_svg(sc: RenderScene) -> str:
    size = sc.n * sc.cell
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f"<title>{escape(sc.title)}</title>",
        '<g class="grid" stroke="#ddd" stroke-width="1">',
    ]
    for k in range(sc.n + 1):
        out.append(f'<line x1="{k * sc.cell}" y1="0" x2="{k * sc.cell}" y2="{size}"/>')
        out.append(f'<line x1="0" y1="{k * sc.cell}" x2="{size}" y2="{k * sc.cell}"/>')
    out.append("</g>")
    out.append('<g class="under" stroke="black" stroke-width="2">')
    for x1, y1, x2, y2 in sc.under:
        out.append(f'<line x1="{x1:g}" y1="{y1:g}" x2="{x2:g}" y2="{y2:g}"/>')
    out.append("</g>")
    out.append('<g class="over" stroke="black" stroke-width="2">')
    for x1, y1, x2, y2 in sc.over:
        out.append(f'<line x1="{x1:g}" y1="{y1:g}" x2="{x2:g}" y2="{y2:g}"/>')
    out.append("</g>")
    for x, y in sc.gaps:
        out.append(f'<rect class="gap" x="{x - GAP / 2:g}" y="{y - 1:g}" width="{GAP}" height="2" fill="none"/>')
    out.append('<g class="markings" font-family="sans-serif" font-size="14" text-anchor="middle">')
    for x, y, label, kind in sc.glyphs:
        out.append(
            f'<circle cx="{x:g}" cy="{y:g}" r="11" fill="white" stroke="black"/>'
            f'<text class="marking-{kind}" x="{x:g}" y="{y + 5:g}">{escape(label)}</text>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(diagram, plane: Plane | str | None = None) -> str:
    """An SVG document of a grid, or of a cube's projection (default xy)."""
    if isinstance(diagram, OrientedGridDiagram):
        problems = validate_grid(diagram)
        if problems:
            raise InvalidInput("cannot render an invalid grid", problems)
        return scene_to_svg(build_scene(diagram))
    if isinstance(diagram, CubeDiagram):
        problems = validate_cube(diagram)
        if problems:
            raise InvalidInput("cannot render an invalid cube", problems)
        plane = Plane.parse(plane or "xy")
        G = project_cube(diagram, plane)
        o_label = "".join(sorted(set("XYZ") - {GRID_X_FAMILY[plane]}))
        return scene_to_svg(build_scene(G, GRID_X_FAMILY[plane], o_label))
    raise InvalidInput(f"cannot render {type(diagram).__name__}")
