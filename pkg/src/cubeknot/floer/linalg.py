"""Sparse matrices over the two-element field with packed-bit rows."""

from __future__ import annotations

from typing import Iterable, Sequence


class SparseF2Matrix:
    """Rows stored as Python ints; bit ``j`` of row ``i`` is entry ``(i, j)``."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Iterable[int] = (), ncols: int = 0):
        self.rows = [int(r) for r in rows]
        self.ncols = ncols

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]]) -> "SparseF2Matrix":
        rows = []
        ncols = 0
        for row in dense:
            ncols = max(ncols, len(row))
            bits = 0
            for j, v in enumerate(row):
                if v % 2:
                    bits |= 1 << j
            rows.append(bits)
        return cls(rows, ncols)

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: Iterable[tuple[int, int]]) -> "SparseF2Matrix":
        """Entries listed twice cancel."""
        rows = [0] * nrows
        for i, j in entries:
            rows[i] ^= 1 << j
        return cls(rows, ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def __getitem__(self, ij) -> int:
        i, j = ij
        return (self.rows[i] >> j) & 1

    def to_dense(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]


def f2_rank(m: SparseF2Matrix | Sequence[int]) -> int:
    """Rank by elimination against a basis keyed on each row's top bit."""
    rows = m.rows if isinstance(m, SparseF2Matrix) else m
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = r
                break
            r ^= b
    return len(basis)
