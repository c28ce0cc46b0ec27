"""Differentials on grid and cube complexes over the two-element field.

A chain is a set of ``(monomial, state)`` pairs; adding a pair twice
removes it.  Monomials are exponent tuples: for grids one exponent per O
(indexed by row), for cubes ``2n`` exponents, the first ``n`` for the first
variable family of the axis and the last ``n`` for the second.
"""

from __future__ import annotations

from typing import Iterable

from ..cubediag import GRID_O_FAMILY, CubeDiagram
from ..griddiag import OrientedGridDiagram
from .domains import _inside_cell, _inside_open, cylinders_from, torus_rectangles
from .states import CubeState, GridState, axis_planes

VARIANTS = ("minus", "tilde", "filtered-hat")

Monomial = tuple


class FormalChain:
    """A GF(2) combination of ``(monomial, state)`` terms."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[Monomial, object]] = ()):
        self.terms: set = set()
        for t in terms:
            self.add(*t)

    def add(self, mono: Monomial, state) -> None:
        key = (tuple(mono), state)
        if key in self.terms:
            self.terms.remove(key)
        else:
            self.terms.add(key)

    def __iter__(self):
        return iter(sorted(self.terms))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalChain) and self.terms == other.terms

    def __add__(self, other: "FormalChain") -> "FormalChain":
        out = FormalChain()
        out.terms = set(self.terms) ^ set(other.terms)
        return out

    def states(self) -> list:
        return sorted({s for _, s in self.terms})

    def __repr__(self) -> str:
        return f"FormalChain({sorted(self.terms)!r})"


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")


# -- grid -----------------------------------------------------------------------

def grid_differential(G: OrientedGridDiagram, s: GridState, variant: str = "minus") -> FormalChain:
    """Sum over empty torus rectangles leaving ``s``.

    minus: every empty rectangle, weighted by ``U_r`` for each O it holds;
    tilde: rectangles free of X and O; filtered-hat: rectangles free of O.
    """
    _check_variant(variant)
    n = G.n
    pts = [(i, s[i]) for i in range(n)]
    xs = [(G.xpos[r], r) for r in range(n)]
    os_ = [(G.opos[r], r) for r in range(n)]
    out = FormalChain()
    for i in range(n):
        for j in range(i + 1, n):
            t = list(s)
            t[i], t[j] = s[j], s[i]
            t = tuple(t)
            for ll, w, h in torus_rectangles(pts[i], pts[j], n):
                if any(_inside_open(pts[k], ll, w, h, n) for k in range(n) if k != i and k != j):
                    continue
                o_in = [1 if _inside_cell(os_[r], ll, w, h, n) else 0 for r in range(n)]
                if variant != "minus" and any(o_in):
                    continue
                if variant == "tilde" and any(_inside_cell(c, ll, w, h, n) for c in xs):
                    continue
                out.add(tuple(o_in) if variant == "minus" else (0,) * n, t)
    return out


# -- cube -----------------------------------------------------------------------

class CubeComplex:
    """Differential of ``C_axis`` for one cube diagram.

    ``axis`` y uses (x,y)-cylinders weighted by X variables and
    (y,z)-cylinders weighted by Y variables; z and x follow cyclically.
    """

    def __init__(self, cube: CubeDiagram, axis: str = "y", variant: str = "minus"):
        _check_variant(variant)
        self.cube = cube
        self.n = cube.n
        self.axis = axis
        self.variant = variant
        self.planes = axis_planes(axis)
        self.families = tuple(GRID_O_FAMILY[p] for p in self.planes)
        self._marks = {}
        for plane in self.planes:
            p, q = plane.coords
            self._marks[plane] = [(f, k, (c[p], c[q])) for f in "XYZ" for k, c in enumerate(cube.family(f))]

    def terms(self, s: CubeState):
        """Yield ``(monomial, t, cylinder)`` before mod-2 cancellation."""
        n = self.n
        for slot, plane in enumerate(self.planes):
            fam = self.families[slot]
            for t, cyl in cylinders_from(self.cube, s, plane, self.axis, self._marks[plane]):
                if self.variant == "tilde" and cyl.census:
                    continue
                exps = [0] * (2 * n)
                for (f, k), c in cyl.census:
                    if f == fam:
                        exps[slot * n + k] += c
                if self.variant == "filtered-hat" and any(exps):
                    continue
                yield tuple(exps), t, cyl

    def differential(self, s: CubeState) -> FormalChain:
        out = FormalChain()
        for mono, t, _ in self.terms(s):
            out.add(mono, t)
        return out


def differential(cube: CubeDiagram, s: CubeState, axis: str = "y", variant: str = "minus") -> FormalChain:
    return CubeComplex(cube, axis, variant).differential(s)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def compose(d, chain: FormalChain) -> FormalChain:
    """Apply the differential ``d`` (a state -> FormalChain callable) to a chain."""
    out = FormalChain()
    for mono, s in chain:
        for m2, t in d(s):
            out.add(mono_mul(mono, m2), t)
    return out


def d_squared(d, s) -> FormalChain:
    """``d(d(s))``; zero for a chain complex."""
    return compose(d, d(s))
