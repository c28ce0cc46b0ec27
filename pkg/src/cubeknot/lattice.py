"""Lattice geometry primitives and the I/J pair-counting functions.

Points are plain tuples.  Cells (marking positions) are integer triples whose
unit cube has that min-corner; the marking itself sits at the cell center.
Lattice points (state points) are integer triples with no coordinate equal to
``n``.  Comparisons of centers against lattice points are done exactly by
doubling: a lattice point ``p`` becomes ``2p`` and a cell ``c`` becomes
``2c + 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

Cell3 = Tuple[int, int, int]
LatticePoint3 = Tuple[int, int, int]
Point = Tuple  # rational 2- or 3-tuple

AXES = "xyz"


class Plane(enum.Enum):
    """An ordered pair of coordinate axes.

    ``first`` is the axis rows run along (horizontal), ``second`` the axis
    columns run along (vertical, the overcrossing direction).
    """

    XY = "xy"
    YZ = "yz"
    ZX = "zx"

    @property
    def first(self) -> int:
        return AXES.index(self.value[0])

    @property
    def second(self) -> int:
        return AXES.index(self.value[1])

    @property
    def coords(self) -> tuple[int, int]:
        return (self.first, self.second)

    @property
    def dropped(self) -> int:
        return 3 - self.first - self.second

    @classmethod
    def parse(cls, value: Union[str, "Plane"]) -> "Plane":
        if isinstance(value, Plane):
            return value
        try:
            return cls(value.lower())
        except ValueError:
            raise ValueError(f"unknown plane {value!r}; expected xy, yz or zx") from None

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class HalfGrading:
    """A grading in ``(1/2)Z`` stored as twice its value."""

    twice: int

    @classmethod
    def of(cls, value) -> "HalfGrading":
        if isinstance(value, HalfGrading):
            return value
        v = Fraction(value) * 2
        if v.denominator != 1:
            raise ValueError(f"{value} is not a multiple of 1/2")
        return cls(int(v))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __add__(self, other: "HalfGrading") -> "HalfGrading":
        return HalfGrading(self.twice + HalfGrading.of(other).twice)

    def __sub__(self, other: "HalfGrading") -> "HalfGrading":
        return HalfGrading(self.twice - HalfGrading.of(other).twice)

    def __neg__(self) -> "HalfGrading":
        return HalfGrading(-self.twice)

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfGrading({self})"

    @classmethod
    def parse(cls, text: str) -> "HalfGrading":
        text = text.strip()
        if text.endswith("/2"):
            return cls(int(text[:-2]))
        return cls(2 * int(text))


class FormalPointSum:
    """A finite formal rational combination of points."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[Point, Fraction]] = ()):
        self.terms = [(tuple(p), Fraction(c)) for p, c in terms]

    @classmethod
    def of(cls, points: Iterable[Point], coeff=1) -> "FormalPointSum":
        return cls((p, coeff) for p in points)

    def __add__(self, other) -> "FormalPointSum":
        return FormalPointSum(self.terms + _as_sum(other).terms)

    def __sub__(self, other) -> "FormalPointSum":
        return FormalPointSum(self.terms + [(p, -c) for p, c in _as_sum(other).terms])

    def __rmul__(self, scalar) -> "FormalPointSum":
        s = Fraction(scalar)
        return FormalPointSum((p, s * c) for p, c in self.terms)

    __mul__ = __rmul__

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"FormalPointSum({self.terms!r})"


def _as_sum(a) -> FormalPointSum:
    if isinstance(a, FormalPointSum):
        return a
    return FormalPointSum.of(a)


def _plane_coords(plane: Plane | None) -> tuple[int, int]:
    return (0, 1) if plane is None else Plane.parse(plane).coords


def i_pair(A: Iterable[Point], B: Iterable[Point], plane: Plane | str | None = None) -> int:
    """Count ordered pairs ``(a, b)`` with ``b`` strictly dominating ``a`` in the plane.

    With ``plane=None`` the points are planar and both coordinates are used.
    """
    p, q = _plane_coords(plane)
    B = list(B)
    return sum(1 for a in A for b in B if a[p] < b[p] and a[q] < b[q])


def j_pair(A, B, plane: Plane | str | None = None) -> Fraction:
    """Symmetrised pair count ``(I(A,B) + I(B,A)) / 2``, extended bilinearly.

    ``A`` and ``B`` may be plain point collections (unit coefficients) or
    :class:`FormalPointSum` values.
    """
    p, q = _plane_coords(plane)
    A = _as_sum(A).terms
    B = _as_sum(B).terms
    total = Fraction(0)
    for a, ca in A:
        for b, cb in B:
            if (a[p] < b[p] and a[q] < b[q]) or (b[p] < a[p] and b[q] < a[q]):
                total += ca * cb
    return total / 2


def project_points(points: Iterable[Point], plane: Plane | str) -> list[tuple]:
    """Drop the coordinate missing from ``plane``; keeps multiplicity and order."""
    p, q = Plane.parse(plane).coords
    return [(pt[p], pt[q]) for pt in points]


def project_sum(s: FormalPointSum, plane: Plane | str) -> FormalPointSum:
    p, q = Plane.parse(plane).coords
    return FormalPointSum(((pt[p], pt[q]), c) for pt, c in s.terms)


def cell_centers(cells: Iterable[Sequence[int]]) -> list[tuple]:
    """Half-integer centers of cells, as Fractions."""
    half = Fraction(1, 2)
    return [tuple(c + half for c in cell) for cell in cells]


def doubled_centers(cells: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    return [tuple(2 * c + 1 for c in cell) for cell in cells]


def doubled_points(points: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    return [tuple(2 * c for c in pt) for pt in points]


def cyclic_offset(value: int, start: int, n: int) -> int:
    """Offset of ``value`` from ``start`` walking forward on ``Z/n``."""
    return (value - start) % n
