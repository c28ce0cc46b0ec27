"""Empty rectangles on the grid torus and empty cylinders in the cube 3-torus."""

from __future__ import annotations

from dataclasses import dataclass

from ..cubediag import CubeDiagram
from ..griddiag import OrientedGridDiagram
from ..lattice import Plane
from .states import CubeState, GridState, axis_planes, normalize_cube_state


@dataclass(frozen=True)
class Rectangle:
    """A torus rectangle ``[a, a+w) x [b, b+h)`` with cyclic wrap.

    ``corner`` is the lower-left corner (a point of the source state).
    ``census`` maps marking labels such as ``("O", 3)`` to containment
    counts.
    """

    corner: tuple[int, int]
    width: int
    height: int
    n: int
    census: tuple[tuple[tuple[str, int], int], ...] = ()

    @property
    def wraps(self) -> tuple[bool, bool]:
        return (self.corner[0] + self.width > self.n, self.corner[1] + self.height > self.n)

    def count(self, family: str) -> int:
        return sum(c for (f, _), c in self.census if f == family)

    def contains_cell(self, cell) -> bool:
        return (cell[0] - self.corner[0]) % self.n < self.width and (cell[1] - self.corner[1]) % self.n < self.height


@dataclass(frozen=True)
class Cylinder:
    """A full-height cuboid over a torus rectangle in ``plane``."""

    plane: Plane
    base: Rectangle
    census: tuple[tuple[tuple[str, int], int], ...]

    @property
    def long_axis(self) -> int:
        return self.plane.dropped

    def count(self, family: str) -> int:
        return sum(c for (f, _), c in self.census if f == family)


def torus_rectangles(u, v, n: int):
    """The two rectangles with source corners ``u`` and ``v``: ``(lower-left, w, h)``."""
    out = []
    for ll, ur in ((u, v), (v, u)):
        out.append((ll, (ur[0] - ll[0]) % n, (ur[1] - ll[1]) % n))
    return out


def _inside_open(pt, ll, w, h, n) -> bool:
    return 0 < (pt[0] - ll[0]) % n < w and 0 < (pt[1] - ll[1]) % n < h


def _inside_cell(cell, ll, w, h, n) -> bool:
    return (cell[0] - ll[0]) % n < w and (cell[1] - ll[1]) % n < h


def empty_rectangles(G: OrientedGridDiagram, s: GridState, t: GridState) -> list[Rectangle]:
    """Empty rectangles from ``s`` to ``t`` with their X/O census (labels are rows)."""
    n = G.n
    diff = [i for i in range(n) if s[i] != t[i]]
    if len(diff) != 2:
        return []
    i, j = diff
    if not (t[i] == s[j] and t[j] == s[i]):
        return []
    pts = [(k, s[k]) for k in range(n)]
    out = []
    for ll, w, h in torus_rectangles(pts[i], pts[j], n):
        if any(_inside_open(pts[k], ll, w, h, n) for k in range(n) if k not in (i, j)):
            continue
        census = []
        for r in range(n):
            if _inside_cell((G.opos[r], r), ll, w, h, n):
                census.append((("O", r), 1))
            if _inside_cell((G.xpos[r], r), ll, w, h, n):
                census.append((("X", r), 1))
        out.append(Rectangle(ll, w, h, n, tuple(census)))
    return out


def _swapped(s: CubeState, i: int, j: int, coord: int) -> CubeState:
    a, b = list(s[i]), list(s[j])
    a[coord], b[coord] = b[coord], a[coord]
    pts = list(s)
    pts[i], pts[j] = tuple(a), tuple(b)
    return normalize_cube_state(pts)


def cylinders_from(cube: CubeDiagram, s: CubeState, plane: Plane, axis: str, marks=None):
    """Yield ``(t, Cylinder)`` for every empty ``plane``-cylinder leaving ``s``.

    The cylinder keeps the projection to the other plane of ``axis`` fixed,
    so it swaps the plane's non-shared coordinate between two points.
    """
    p1, p2 = axis_planes(axis)
    if plane not in (p1, p2):
        raise ValueError(f"plane {plane.value} is not used by axis {axis}")
    shared = p1.second
    p, q = plane.coords
    swap = p if q == shared else q
    n = cube.n
    if marks is None:
        marks = [(f, k, (c[p], c[q])) for f in "XYZ" for k, c in enumerate(cube.family(f))]
    flat = [(pt[p], pt[q]) for pt in s]
    for i in range(n):
        for j in range(i + 1, n):
            for ll, w, h in torus_rectangles(flat[i], flat[j], n):
                if any(_inside_open(flat[k], ll, w, h, n) for k in range(n) if k != i and k != j):
                    continue
                census = tuple(((f, k), 1) for f, k, c in marks if _inside_cell(c, ll, w, h, n))
                yield _swapped(s, i, j, swap), Cylinder(plane, Rectangle(ll, w, h, n), census)


def empty_cylinders(cube: CubeDiagram, s: CubeState, t: CubeState, plane: Plane | str, axis: str | None = None) -> list[Cylinder]:
    """Empty ``plane``-cylinders from ``s`` to ``t``.

    ``axis`` picks which other projection must agree; by default the plane's
    partner under the axis for which it is the first plane.
    """
    plane = Plane.parse(plane)
    if axis is None:
        axis = {Plane.XY: "y", Plane.YZ: "z", Plane.ZX: "x"}[plane]
    t = normalize_cube_state(t)
    return [c for u, c in cylinders_from(cube, normalize_cube_state(s), plane, axis) if u == t]
