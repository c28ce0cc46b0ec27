"""Lifting grid diagrams to cube diagrams.

The lift works in the (x,y) frame.  Row ``r`` of the grid holds the bend
whose vertex is the grid X at ``(xpos[r], r)``; it becomes the z-flat at
level ``levels[r]`` containing

    Z_r = (xpos[r], r, l_r),  Y_r = (opos[r], r, l_r),  X_r = (xpos[r], r', l_r)

where ``opos[r'] = xpos[r]``.  Any choice of distinct levels gives valid
marking conditions and a projection equal to the grid; the (x,y) crossing
condition becomes "a column's bend sits above every row bend it crosses".
The (y,z) and (z,x) conditions are then searched for, with a local reroute
(:func:`crossing_surgery`) as the fallback.
"""

from __future__ import annotations

import graphlib
import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .cubediag import (
    CubeDiagram,
    Segment,
    _compress,
    canonicalize,
    crossing_census,
    crossing_violations,
    rotate,
    rotate_cell,
    segments,
    successor_map,
    validate_cube,
)
from .errors import BudgetExhausted, ConstraintCycle, SurgeryFailed
from .griddiag import BendClass, OrientedGridDiagram, classify_bends, crossings, untwist
from .lattice import Plane

_STRUCTURAL = ("shape", "size", "range", "collision", "flat", "right-angle", "segment")
_TIER = {BendClass.UNDER: 0, BendClass.NEUTRAL: 1, BendClass.OVER: 2, BendClass.TWISTED: 1}


@dataclass(frozen=True)
class StackPlan:
    """z-levels for the X-vertex bends, one per grid row."""

    levels: tuple[int, ...]
    edges: frozenset[tuple[int, int]]  # (lower row, upper row)

    @property
    def order(self) -> tuple[int, ...]:
        """Rows from bottom level to top."""
        return tuple(sorted(range(len(self.levels)), key=self.levels.__getitem__))


@dataclass
class LiftReport:
    final_size: int
    untwist_stabilizations: int
    orderings_searched: int
    surgeries: int
    residual_violations: list = field(default_factory=list)
    levels: tuple[int, ...] = ()

    @property
    def success(self) -> bool:
        return not self.residual_violations

    def lines(self) -> list[str]:
        return [
            f"final_size {self.final_size}",
            f"untwist_stabilizations {self.untwist_stabilizations}",
            f"orderings_searched {self.orderings_searched}",
            f"surgeries {self.surgeries}",
            f"residual_violations {len(self.residual_violations)}",
        ]


@dataclass(frozen=True)
class Violation:
    plane: Plane
    first: Segment
    second: Segment


# -- constraints and plans -----------------------------------------------------

def stack_constraints(G: OrientedGridDiagram) -> set[tuple[int, int]]:
    """Pairs ``(lower, upper)`` of rows forced by the (x,y) crossing condition."""
    row_of_xcol = {c: r for r, c in enumerate(G.xpos)}
    return {(r, row_of_xcol[c]) for c, r in crossings(G)}


def plan_stack(G: OrientedGridDiagram) -> StackPlan:
    """Levels satisfying every over/under constraint of the grid.

    Under bends go lowest, then neutral bends in row order, then over
    bends.  Diagrams with twisted bends fall back to a topological order and
    raise :class:`ConstraintCycle` when none exists.
    """
    edges = stack_constraints(G)
    n = G.n
    ts = graphlib.TopologicalSorter({r: set() for r in range(n)})
    for lo, hi in edges:
        ts.add(hi, lo)
    try:
        ts.prepare()
    except graphlib.CycleError as e:
        raise ConstraintCycle(e.args[1][:-1]) from None
    classes = [cls for _, cls in classify_bends(G, "X")]
    if BendClass.TWISTED not in classes:
        order = sorted(range(n), key=lambda r: (_TIER[classes[r]], r))
    else:
        order = []
        while ts.is_active():
            ready = sorted(ts.get_ready())
            order.extend(ready)
            ts.done(*ready)
    levels = [0] * n
    for lvl, r in enumerate(order):
        levels[r] = lvl
    return StackPlan(tuple(levels), frozenset(edges))


def cube_from_levels(G: OrientedGridDiagram, levels: Sequence[int]) -> CubeDiagram:
    """The z-stacked lift of ``G`` (read in the (x,y) frame) at the given levels."""
    n = G.n
    o_row_of_col = {c: r for r, c in enumerate(G.opos)}
    X, Y, Z = [], [], []
    for r in range(n):
        lr = levels[r]
        Z.append((G.xpos[r], r, lr))
        Y.append((G.opos[r], r, lr))
        X.append((G.xpos[r], o_row_of_col[G.xpos[r]], lr))
    return CubeDiagram(X, Y, Z)


def linear_extensions(n: int, edges: set[tuple[int, int]]) -> Iterator[tuple[int, ...]]:
    """All bottom-to-top row orders respecting ``edges``, lexicographically."""
    below = {r: set() for r in range(n)}
    for lo, hi in edges:
        below[hi].add(lo)
    placed: list[int] = []
    used = [False] * n

    def rec():
        if len(placed) == n:
            yield tuple(placed)
            return
        for r in range(n):
            if not used[r] and all(used[b] for b in below[r]):
                used[r] = True
                placed.append(r)
                yield from rec()
                placed.pop()
                used[r] = False

    yield from rec()


def _random_extensions(n: int, edges, count: int, seed: int) -> Iterator[tuple[int, ...]]:
    rng = random.Random(seed)
    below = {r: set() for r in range(n)}
    for lo, hi in edges:
        below[hi].add(lo)
    for _ in range(count):
        used: set[int] = set()
        order = []
        while len(order) < n:
            ready = [r for r in range(n) if r not in used and below[r] <= used]
            r = rng.choice(ready)
            used.add(r)
            order.append(r)
        yield tuple(order)


def default_budget(n: int) -> int:
    return math.factorial(n) if n <= 6 else 10_000


def all_violations(cube: CubeDiagram) -> list[Violation]:
    segs = segments(cube)
    return [Violation(p, a, b) for p in Plane for a, b in crossing_violations(cube, p, segs)]


# -- lifting ---------------------------------------------------------------------

def lift_grid(
    G: OrientedGridDiagram,
    budget: int | None = None,
    surgery: bool = True,
    seed: int = 0,
) -> tuple[CubeDiagram, LiftReport]:
    """A cube diagram whose projection in ``G``'s orientation is ``G`` up to stabilization.

    Untwists, then walks the stack orderings consistent with the plan's
    constraints (all of them in lexicographic order when ``n <= 6``, else
    seeded samples), returning the first ordering with no crossing
    violations.  Otherwise the best ordering is repaired by
    :func:`crossing_surgery` if allowed.
    """
    G.check()
    k = {Plane.XY: 0, Plane.YZ: 1, Plane.ZX: 2}[Plane.parse(G.orientation)]
    G0 = G.with_orientation(Plane.XY)
    # Twisted bends only matter when their constraints cycle, so the grid
    # itself is tried first and untwisting is the fallback.
    stages = []
    try:
        stages.append((G0, plan_stack(G0)))
    except ConstraintCycle:
        pass
    G1 = untwist(G0, "X")
    if G1 != G0:
        stages.append((G1, plan_stack(G1)))

    searched = 0
    best = None
    for grid, plan in stages:
        n = grid.n
        limit = default_budget(n) if budget is None else budget
        if n <= 6:
            orders = linear_extensions(n, plan.edges)
        else:
            orders = itertools.chain([plan.order], _random_extensions(n, plan.edges, limit - 1, seed))
        for used, order in enumerate(orders):
            if used >= limit:
                break
            searched += 1
            levels = [0] * n
            for lvl, r in enumerate(order):
                levels[r] = lvl
            cube = cube_from_levels(grid, levels)
            bad = all_violations(cube)
            # prefer the smaller grid at equal violation counts
            if best is None or len(bad) < len(best[1]):
                best = (cube, bad, tuple(levels), grid)
            if not bad:
                break
        if best is not None and not best[1]:
            break
    assert best is not None
    cube, bad, levels, grid = best
    report = LiftReport(cube.n, grid.n - G0.n, searched, 0, list(bad), levels)
    if bad and surgery:
        try:
            while True:
                bad = all_violations(cube)
                if not bad:
                    break
                cube = crossing_surgery(cube, bad[0], keep_plane=Plane.XY)
                report.surgeries += 1
        except SurgeryFailed:
            pass
        report.residual_violations = list(all_violations(cube))
        report.final_size = cube.n
    if report.residual_violations:
        raise BudgetExhausted(
            f"no violation-free lift within {searched} orderings"
            + (f" and {report.surgeries} surgeries" if surgery else " (surgery disabled)"),
            len(report.residual_violations),
        )
    return canonicalize(rotate(cube, k)), report


# -- surgery -------------------------------------------------------------------

def _structural_ok(cube: CubeDiagram) -> bool:
    return not any(p.code in _STRUCTURAL for p in validate_cube(cube))


def _crossing_count(cube: CubeDiagram, plane: Plane) -> int:
    return len(crossing_census(cube, plane))


def crossing_surgery(
    cube: CubeDiagram,
    violation: Violation | None = None,
    keep_plane: Plane | str | None = None,
) -> CubeDiagram:
    """Reroute one segment of a crossing violation around the other; size grows by two.

    The rerouted segment leaves its start, jumps past the other segment's
    span, crosses, and comes back, inserting two marking triples; the
    marking after it moves to a new flat next to the old one.  Placements
    are searched over a small box of new flat positions and the first one
    that is a marking-valid diagram with fewer violations (and, when
    ``keep_plane`` is given, an unchanged crossing count there) is kept.
    """
    before = all_violations(cube)
    if not before:
        raise SurgeryFailed("diagram has no crossing violation to repair")
    if violation is None:
        violation = before[0]
    if not _structural_ok(cube):
        raise SurgeryFailed("surgery needs valid marking conditions")
    keep = None if keep_plane is None else Plane.parse(keep_plane)
    base_keep = None if keep is None else _crossing_count(cube, keep)
    # segment a is parallel to the plane's first axis, b to the second
    for seg, other in ((violation.first, violation.second), (violation.second, violation.first)):
        for cand in _detours(cube, seg, other):
            after = all_violations(cand)
            if len(after) >= len(before):
                continue
            if keep is not None and _crossing_count(cand, keep) != base_keep:
                continue
            return canonicalize(cand)
    raise SurgeryFailed(f"no local reroute repairs the {violation.plane.value} violation")


def _detours(cube: CubeDiagram, seg: Segment, other: Segment) -> Iterator[CubeDiagram]:
    """Candidate reroutes of ``seg`` around ``other`` (both in the input frame).

    Works on quadrupled coordinates so new flats can sit on either side of
    any existing one.  Every candidate is marking-valid.
    """
    # Bring seg to a y-parallel Z -> X segment.  rotate() sends types
    # Z->X, X->Y, Y->Z, so a segment of kind "ZX" needs 0 turns, "XY" 2
    # turns and "YZ" 1 turn.
    turns = {"ZX": 0, "XY": 2, "YZ": 1}[seg.kind]
    rc = rotate(cube, turns)
    s = rotate_cell(seg.start, turns)
    e = rotate_cell(seg.end, turns)
    o_start = rotate_cell(other.start, turns)

    n = cube.n
    succ = successor_map(rc)
    _, f = succ[("X", e)]  # the Y after the rerouted segment's end
    # the other segment is perpendicular to y; it pins the y-level b to cross
    b = o_start[1]
    direction = 1 if e[1] > s[1] else -1
    u1 = 4 * b - 2 * direction
    u2 = 4 * b + 2 * direction
    gaps = [4 * v + 2 for v in range(-1, n)]

    def near(v):
        return [4 * v - 1, 4 * v + 1, 4 * v - 2, 4 * v + 2]

    zs = list(dict.fromkeys(near(s[2]) + gaps))
    xs = list(dict.fromkeys(near(s[0]) + gaps))
    q = lambda p: tuple(4 * v for v in p)  # noqa: E731
    X0 = [q(p) for p in rc.X if p != e]
    Y0 = [q(p) for p in rc.Y if p != f]
    Z0 = [q(p) for p in rc.Z]
    sx, sz = 4 * s[0], 4 * s[2]
    ey, fz = 4 * e[1], 4 * f[2]
    for v1, w1, v2, w2 in itertools.product(zs, xs, zs, xs):
        if v1 == v2 or w1 == w2:
            continue
        if v1 % 4 == 0 or v2 % 4 == 0 or w1 % 4 == 0 or w2 % 4 == 0:
            continue
        x1 = (sx, u1, sz)
        y1 = (sx, u1, v1)
        z1 = (w1, u1, v1)
        x2 = (w1, u2, v1)
        y2 = (w1, u2, v2)
        z2 = (w2, u2, v2)
        e_new = (w2, ey, v2)
        f_new = (w2, ey, fz)
        fam = {
            "X": X0 + [x1, x2, e_new],
            "Y": Y0 + [y1, y2, f_new],
            "Z": Z0 + [z1, z2],
        }
        try:
            fam = _compress(fam, n + 2)
        except Exception:
            continue
        cand = CubeDiagram(fam["X"], fam["Y"], fam["Z"])
        if not _structural_ok(cand):
            continue
        yield rotate(cand, -turns)
