"""Grid states, cube states and the splice map between them.

A grid state is a permutation ``p`` with points ``(i, p[i])`` (column,
row).  A cube state is a tuple of ``n`` lattice points sorted by x; its
x-coordinates are ``0..n-1`` and its y- and z-coordinates are permutations.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Sequence

from ..lattice import Plane

GridState = tuple  # tuple[int, ...]
CubeState = tuple  # tuple[tuple[int, int, int], ...]

# the two projections carrying the complex for each shared axis
AXIS_PLANES = {
    "y": (Plane.XY, Plane.YZ),
    "z": (Plane.YZ, Plane.ZX),
    "x": (Plane.ZX, Plane.XY),
}


def axis_planes(axis: str) -> tuple[Plane, Plane]:
    try:
        return AXIS_PLANES[axis.lower()]
    except KeyError:
        raise ValueError(f"unknown axis {axis!r}; expected x, y or z") from None


def grid_points(s: GridState) -> list[tuple[int, int]]:
    return [(i, r) for i, r in enumerate(s)]


def enumerate_grid_states(n: int) -> Iterator[GridState]:
    return itertools.permutations(range(n))


def cube_state(alpha: Sequence[int], beta: Sequence[int]) -> CubeState:
    return tuple((i, alpha[i], beta[i]) for i in range(len(alpha)))


def normalize_cube_state(points) -> CubeState:
    return tuple(sorted(tuple(p) for p in points))


def is_cube_state(points, n: int) -> bool:
    pts = list(points)
    if len(pts) != n:
        return False
    return all(sorted(p[a] for p in pts) == list(range(n)) for a in range(3))


def enumerate_cube_states(n: int) -> Iterator[CubeState]:
    """All ``(n!)^2`` cube states, ordered by ``(alpha, beta)``."""
    if n < 2:
        raise ValueError("cube states need n >= 2")
    perms = list(itertools.permutations(range(n)))
    for alpha in perms:
        for beta in perms:
            yield cube_state(alpha, beta)


def random_cube_states(n: int, count: int, seed: int = 0) -> list[CubeState]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        a = list(range(n))
        b = list(range(n))
        rng.shuffle(a)
        rng.shuffle(b)
        out.append(cube_state(a, b))
    return out


def project_state(s: CubeState, plane: Plane | str) -> GridState:
    """The grid state ``pi(s)`` of the projection, as a permutation."""
    p, q = Plane.parse(plane).coords
    perm = [0] * len(s)
    for pt in s:
        perm[pt[p]] = pt[q]
    return tuple(perm)


def psi(s_first: GridState, s_second: GridState, axis: str = "y") -> CubeState:
    """Splice states of the two projections sharing ``axis`` into a cube state.

    The first projection's second coordinate and the second projection's
    first coordinate are both the shared axis; points are matched on it.
    """
    p1, p2 = axis_planes(axis)
    a = p1.second  # == p2.first
    n = len(s_first)
    by_shared = {s_second_first: s_second[s_second_first] for s_second_first in range(n)}
    pts = []
    for c1, shared in enumerate(s_first):
        pt = [0, 0, 0]
        pt[p1.first] = c1
        pt[a] = shared
        pt[p2.second] = by_shared[shared]
        pts.append(tuple(pt))
    return normalize_cube_state(pts)
