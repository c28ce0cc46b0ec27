"""Exception types shared across the package."""

from __future__ import annotations


class CubeKnotError(Exception):
    """Base class for all package errors."""


class InvalidInput(CubeKnotError):
    """A diagram or argument failed validation."""

    def __init__(self, message: str, problems: list | None = None):
        super().__init__(message)
        self.problems = list(problems or [])


class InvalidGrid(InvalidInput):
    pass


class InvalidCube(InvalidInput):
    pass


class ParseError(CubeKnotError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ValidationError(InvalidInput):
    """Raised by the parsers when a file is well formed but not a diagram."""


class IllegalMove(CubeKnotError):
    """A move whose legality test failed.

    ``reason`` is a short machine-readable tag, e.g. ``"interleaved"``,
    ``"crossing-condition"``, ``"pattern-absent"`` or ``"out-of-range"``.
    """

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason
        self.detail = detail


class ConstraintCycle(CubeKnotError):
    def __init__(self, cycle):
        super().__init__(f"over/under constraints contain a cycle through bends {list(cycle)}")
        self.cycle = list(cycle)


class BudgetExhausted(CubeKnotError):
    def __init__(self, message: str, best_violations: int):
        super().__init__(message)
        self.best_violations = best_violations


class SurgeryFailed(CubeKnotError):
    pass


class InvariantViolation(CubeKnotError):
    """An internal consistency check failed (selftest / CLI exit code 4)."""
