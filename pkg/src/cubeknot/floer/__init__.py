"""Grid and cube chain complexes and their homology over the two-element field."""

from .chains import VARIANTS, CubeComplex, FormalChain, compose, d_squared, differential, grid_differential
from .domains import Cylinder, Rectangle, empty_cylinders, empty_rectangles
from .gradings import CubeGrader, CubeGradings, cube_gradings, grid_gradings
from .homology import (
    BigradedDimTable,
    check_tensor_iso,
    cube_homology_table,
    grid_homology_table,
    homology_table,
    laurent_mul,
    laurent_pow,
    thread_count,
    unit_normal,
    variable_maps,
)
from .linalg import SparseF2Matrix, f2_rank
from .states import (
    AXIS_PLANES,
    axis_planes,
    enumerate_cube_states,
    enumerate_grid_states,
    is_cube_state,
    project_state,
    psi,
    random_cube_states,
)

__all__ = [
    "AXIS_PLANES",
    "BigradedDimTable",
    "CubeComplex",
    "CubeGrader",
    "CubeGradings",
    "Cylinder",
    "FormalChain",
    "Rectangle",
    "SparseF2Matrix",
    "VARIANTS",
    "axis_planes",
    "check_tensor_iso",
    "compose",
    "cube_gradings",
    "cube_homology_table",
    "d_squared",
    "differential",
    "empty_cylinders",
    "empty_rectangles",
    "enumerate_cube_states",
    "enumerate_grid_states",
    "f2_rank",
    "grid_differential",
    "grid_gradings",
    "grid_homology_table",
    "homology_table",
    "is_cube_state",
    "laurent_mul",
    "laurent_pow",
    "project_state",
    "psi",
    "random_cube_states",
    "thread_count",
    "unit_normal",
    "variable_maps",
]
