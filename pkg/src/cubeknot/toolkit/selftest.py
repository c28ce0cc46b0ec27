"""Invariant checks runnable from the command line.

Each check raises :class:`InvariantViolation` on failure; ``run`` stops at
the first one.
"""

from __future__ import annotations

import random
from typing import Callable

from .. import fixtures as fx
from ..cubediag import (
    FlatRef,
    commute,
    destabilize,
    enumerate_cubes,
    legal_commutations,
    project_cube,
    stabilize,
    validate_cube,
)
from ..errors import InvariantViolation
from ..floer import (
    CubeComplex,
    CubeGrader,
    check_tensor_iso,
    d_squared,
    enumerate_cube_states,
    grid_gradings,
    homology_table,
    laurent_mul,
    laurent_pow,
    project_state,
    random_cube_states,
    unit_normal,
)
from ..griddiag import apply_grid_move, inverse_move, legal_moves, validate_grid
from ..lattice import Plane
from ..lifting import lift_grid


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvariantViolation(message)


def check_u2_table() -> None:
    t = homology_table(fx.u2(), "y", "tilde", True)
    _require(t.as_ints() == {(0, 0): 1, (-1, -1): 2, (-2, -2): 1}, f"U2 table is {t.as_ints()}")


def check_projections() -> None:
    for n in (2, 3):
        for cube in enumerate_cubes(n):
            for plane in Plane:
                _require(not validate_grid(project_cube(cube, plane)), f"invalid {plane} projection")


def check_d_squared(full: bool) -> None:
    sizes = (2, 3) if full else (2,)
    for n in sizes:
        for cube in enumerate_cubes(n):
            for axis in "xyz":
                cx = CubeComplex(cube, axis, "minus")
                for s in enumerate_cube_states(n):
                    _require(not d_squared(cx.differential, s), f"d^2 != 0 at {s}")
    cx = CubeComplex(fx.gt5_cube(), "y", "minus")
    for s in random_cube_states(5, 50 if not full else 200, seed=1):
        _require(not d_squared(cx.differential, s), f"d^2 != 0 on the trefoil cube at {s}")


def check_projection_gradings() -> None:
    for cube in [fx.u2(), fx.u2_stabilized()]:
        grader = CubeGrader(cube)
        for s in enumerate_cube_states(cube.n):
            for plane in Plane:
                G = project_cube(cube, plane)
                want = grid_gradings(G, project_state(s, plane))
                _require(grader.plane_grading(s, plane) == want, f"{plane} grading mismatch at {s}")


def check_tensor() -> None:
    for cube in [fx.u2(), fx.u2_stabilized()]:
        for axis in "xyz":
            for variant in ("minus", "tilde"):
                _require(check_tensor_iso(cube, axis, variant), f"tensor identity fails ({axis}, {variant})")


def check_moves() -> None:
    u = fx.u2()
    base = homology_table(u, "y", "tilde", True)
    s = stabilize(u, "X", 0)
    _require(not validate_cube(s), "stabilization is invalid")
    _require(
        homology_table(s, "y", "tilde", True).same_entries(base.times_v(2)),
        "stabilization does not multiply the table by (1+u)^2",
    )
    _require(destabilize(s, "X", 0).same_as(u), "destabilization does not undo stabilization")
    for f in legal_commutations(u):
        c = commute(u, f)
        _require(homology_table(c, "y", "tilde", True).same_entries(base), f"commuting {f} changes the table")
        _require(commute(c, FlatRef(f.axis, f.index)).same_as(u), "commutation is not an involution")
    rng = random.Random(3)
    G = fx.GT5
    gbase = homology_table(G, normalize=True)
    moves = [m for m in legal_moves(G) if m.kind.value != "stabilize"]
    for m in rng.sample(moves, min(4, len(moves))):
        H = apply_grid_move(G, m)
        _require(homology_table(H, normalize=True).same_entries(gbase), f"grid move {m} changes the table")
        _require(apply_grid_move(H, inverse_move(G, m)) == G, f"grid move {m} has a wrong inverse")


def check_trefoil() -> None:
    t = homology_table(fx.GT5, normalize=True)
    _require(t.total == 48, f"trefoil grid total {t.total}")
    want = laurent_mul(laurent_pow({0: 1, -2: -1}, 4), {2: 1, 0: -1, -2: 1})
    _require(unit_normal(t.euler()) == unit_normal(want), "trefoil Euler characteristic mismatch")
    cube, report = lift_grid(fx.GT5_SHIFTED)
    _require(report.success and cube.n == 5, "shifted trefoil grid does not lift at size 5")
    _require(project_cube(cube, "xy") == fx.GT5_SHIFTED, "lift does not project back")


CHECKS: list[tuple[str, Callable[[], None]]] = [
    ("u2-table", check_u2_table),
    ("projections", check_projections),
    ("projection-gradings", check_projection_gradings),
    ("tensor", check_tensor),
    ("moves", check_moves),
    ("trefoil", check_trefoil),
]


def run(full: bool = False, echo: Callable[[str], None] = print) -> None:
    for name, fn in CHECKS + [("d-squared", lambda: check_d_squared(full))]:
        fn()
        echo(f"ok {name}")
