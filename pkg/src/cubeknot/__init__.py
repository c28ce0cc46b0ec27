"""Cube diagrams of links: validation, moves, lifting and cube homology."""

from .cubediag import CubeDiagram, CubeMove, FlatRef, apply_cube_move, project_cube, traverse_link, validate_cube
from .errors import (
    BudgetExhausted,
    ConstraintCycle,
    CubeKnotError,
    IllegalMove,
    InvalidCube,
    InvalidGrid,
    InvalidInput,
    InvariantViolation,
    ParseError,
    SurgeryFailed,
    ValidationError,
)
from .griddiag import GridMove, OrientedGridDiagram, apply_grid_move, validate_grid
from .lattice import HalfGrading, Plane
from .lifting import crossing_surgery, lift_grid, plan_stack

__version__ = "0.1.0"

__all__ = [
    "BudgetExhausted",
    "ConstraintCycle",
    "CubeDiagram",
    "CubeKnotError",
    "CubeMove",
    "FlatRef",
    "GridMove",
    "HalfGrading",
    "IllegalMove",
    "InvalidCube",
    "InvalidGrid",
    "InvalidInput",
    "InvariantViolation",
    "OrientedGridDiagram",
    "ParseError",
    "Plane",
    "SurgeryFailed",
    "ValidationError",
    "apply_cube_move",
    "apply_grid_move",
    "crossing_surgery",
    "lift_grid",
    "plan_stack",
    "project_cube",
    "traverse_link",
    "validate_cube",
    "validate_grid",
]
