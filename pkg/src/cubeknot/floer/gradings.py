"""Maslov and Alexander gradings of grid and cube states.

Everything is evaluated on doubled coordinates (lattice point ``p`` becomes
``2p``, marking cell ``c`` becomes ``2c + 1``) so all comparisons are exact
integers.  With ``P(A, B) = I(A, B) + I(B, A)`` the definitions expand to

    2M = 2 I(s,s) - 2 P(s,O) + 2 I(O,O) + 2
    2A = P(s,X) - P(s,O) - I(X,X) + I(O,O) +/- (n - 1)

where ``+`` is the literal constant and ``-`` the normalized one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..cubediag import GRID_O_FAMILY, GRID_X_FAMILY, CubeDiagram
from ..griddiag import OrientedGridDiagram
from ..lattice import HalfGrading, Plane
from .states import CubeState, GridState, axis_planes


def _dominance(A, B) -> int:
    return sum(1 for a in A for b in B if a[0] < b[0] and a[1] < b[1])


def _comparable(A, B) -> int:
    return sum(1 for a in A for b in B if (a[0] < b[0]) == (a[1] < b[1]))


class _PlanarGrader:
    """Gradings for one oriented grid, keyed by the planar state."""

    def __init__(self, xs, os_, n: int):
        self.n = n
        self.xs = tuple(xs)
        self.os = tuple(os_)
        self.ixx = _dominance(self.xs, self.xs)
        self.ioo = _dominance(self.os, self.os)
        self._cache: dict = {}

    def twice(self, pts) -> tuple[int, int, int]:
        """``(2M, 2A_literal - (n-1))`` for doubled planar points."""
        key = tuple(pts)
        hit = self._cache.get(key)
        if hit is None:
            pso = _comparable(pts, self.os)
            m2 = 2 * _dominance(pts, pts) - 2 * pso + 2 * self.ioo + 2
            a2 = _comparable(pts, self.xs) - pso - self.ixx + self.ioo
            hit = self._cache[key] = (m2, a2)
        return hit

    def grading(self, pts, normalized: bool) -> tuple[HalfGrading, HalfGrading]:
        m2, a2 = self.twice(pts)
        shift = -(self.n - 1) if normalized else self.n - 1
        return HalfGrading(m2), HalfGrading(a2 + shift)


@lru_cache(maxsize=256)
def _grid_grader(G: OrientedGridDiagram) -> _PlanarGrader:
    xs = [(2 * c + 1, 2 * r + 1) for r, c in enumerate(G.xpos)]
    os_ = [(2 * c + 1, 2 * r + 1) for r, c in enumerate(G.opos)]
    return _PlanarGrader(xs, os_, G.n)


def grid_gradings(G: OrientedGridDiagram, s: GridState, normalized: bool = False) -> tuple[HalfGrading, HalfGrading]:
    """``(M, A)`` of the grid state ``s`` (points ``(i, s[i])``)."""
    pts = tuple((2 * i, 2 * r) for i, r in enumerate(s))
    return _grid_grader(G).grading(pts, normalized)


@dataclass(frozen=True)
class CubeGradings:
    M: HalfGrading
    A: HalfGrading
    M_first: HalfGrading
    M_second: HalfGrading
    A_first: HalfGrading
    A_second: HalfGrading
    planes: tuple[Plane, Plane]


class CubeGrader:
    """Plane-by-plane gradings of cube states, evaluated in 3D.

    ``M_P`` uses the family projecting to grid O that carries the ring
    variables (xy: X, yz: Y, zx: Z); ``A_P`` pairs it with the family
    projecting to grid X (xy: Z, yz: X, zx: Y).  Only the two coordinates of
    the plane enter any comparison, so results are memoized by the
    projected point set.
    """

    def __init__(self, cube: CubeDiagram):
        self.cube = cube
        self.n = cube.n
        self._planar = {}
        for plane in Plane:
            p, q = plane.coords
            fam_o = cube.family(GRID_O_FAMILY[plane])
            fam_x = cube.family(GRID_X_FAMILY[plane])
            os_ = [(2 * c[p] + 1, 2 * c[q] + 1) for c in fam_o]
            xs = [(2 * c[p] + 1, 2 * c[q] + 1) for c in fam_x]
            self._planar[plane] = _PlanarGrader(xs, os_, cube.n)

    def plane_grading(self, s: CubeState, plane: Plane, normalized: bool = False) -> tuple[HalfGrading, HalfGrading]:
        p, q = plane.coords
        pts = tuple(sorted((2 * pt[p], 2 * pt[q]) for pt in s))
        return self._planar[plane].grading(pts, normalized)

    def gradings(self, s: CubeState, axis: str = "y", normalized: bool = False) -> CubeGradings:
        p1, p2 = axis_planes(axis)
        m1, a1 = self.plane_grading(s, p1, normalized)
        m2, a2 = self.plane_grading(s, p2, normalized)
        return CubeGradings(m1 + m2, a1 + a2, m1, m2, a1, a2, (p1, p2))


def cube_gradings(cube: CubeDiagram, s: CubeState, axis: str = "y", normalized: bool = False) -> CubeGradings:
    return CubeGrader(cube).gradings(s, axis, normalized)
