"""Named diagrams used by the tests, the selftest and the examples."""

from __future__ import annotations

from .cubediag import CubeDiagram, canonicalize, direct_sum, stabilize, unknot2
from .griddiag import OrientedGridDiagram, cyclic_permute
from .lifting import cube_from_levels

# size-2 unknot grid
G_U2 = OrientedGridDiagram([1, 0], [0, 1])

# 5x5 trefoil grid; its X-vertex bends constrain each other in a 3-cycle,
# so no size-5 cube diagram projects onto it
GT5 = OrientedGridDiagram([0, 1, 2, 3, 4], [2, 3, 4, 0, 1])

# GT5 after one cyclic column shift: same trefoil, liftable at size 5
GT5_SHIFTED = cyclic_permute(GT5, 1, "cols")

# two-component grid whose two twisted bends cross each other twice
TWISTED_PAIR = OrientedGridDiagram([0, 1, 2, 3], [2, 3, 0, 1])

# knot grid with exactly one twisted X-vertex bend (row 3)
ONE_TWISTED = OrientedGridDiagram([2, 5, 4, 3, 0, 1], [5, 1, 2, 0, 4, 3])

# two-component grid plus stack levels leaving exactly one (y,z) violation
SURGERY_GRID = OrientedGridDiagram([0, 2, 1, 3], [1, 3, 0, 2])
SURGERY_LEVELS = (0, 1, 2, 3)


def u2() -> CubeDiagram:
    return unknot2()


def u2_stabilized() -> CubeDiagram:
    return stabilize(unknot2(), "X", 0)


def split_u2_pair() -> CubeDiagram:
    return direct_sum(unknot2(), unknot2())


def gt5_cube() -> CubeDiagram:
    """Size-5 trefoil cube: the identity stacking of :data:`GT5_SHIFTED`."""
    return canonicalize(cube_from_levels(GT5_SHIFTED, range(5)))


def surgery_input() -> CubeDiagram:
    """Marking-valid diagram with a single (y,z) crossing violation."""
    return cube_from_levels(SURGERY_GRID, SURGERY_LEVELS)
