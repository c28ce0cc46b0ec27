"""Oriented grid diagrams: validation, moves and bend analysis.

Rows run along the orientation's first axis and are indexed bottom to top;
columns run along the second axis and are indexed left to right.  ``xpos[r]``
and ``opos[r]`` are the columns of the X and O markings in row ``r``.  The
link runs from O to X along each row and from X to O along each column, and
column (vertical) segments are the overcrossings.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Literal, Sequence

from .errors import IllegalMove, InvalidGrid
from .lattice import Plane


@dataclass(frozen=True)
class Problem:
    code: str
    message: str
    where: tuple = ()

    def __str__(self) -> str:
        return f"[{self.code}] {self.message}"


@dataclass(frozen=True)
class OrientedGridDiagram:
    xpos: tuple[int, ...]
    opos: tuple[int, ...]
    orientation: Plane = Plane.XY

    def __post_init__(self):
        object.__setattr__(self, "xpos", tuple(int(c) for c in self.xpos))
        object.__setattr__(self, "opos", tuple(int(c) for c in self.opos))
        object.__setattr__(self, "orientation", Plane.parse(self.orientation))

    @property
    def n(self) -> int:
        return len(self.xpos)

    @property
    def x_cells(self) -> list[tuple[int, int]]:
        """``(column, row)`` of every X marking, by row."""
        return [(c, r) for r, c in enumerate(self.xpos)]

    @property
    def o_cells(self) -> list[tuple[int, int]]:
        return [(c, r) for r, c in enumerate(self.opos)]

    def x_row_of_col(self) -> list[int]:
        rows = [0] * self.n
        for r, c in enumerate(self.xpos):
            rows[c] = r
        return rows

    def o_row_of_col(self) -> list[int]:
        rows = [0] * self.n
        for r, c in enumerate(self.opos):
            rows[c] = r
        return rows

    def check(self) -> "OrientedGridDiagram":
        problems = validate_grid(self)
        if problems:
            raise InvalidGrid("; ".join(map(str, problems)), problems)
        return self

    def with_orientation(self, plane) -> "OrientedGridDiagram":
        return OrientedGridDiagram(self.xpos, self.opos, Plane.parse(plane))

    def num_components(self) -> int:
        nxt = self._row_successor()
        seen = [False] * self.n
        count = 0
        for r in range(self.n):
            if not seen[r]:
                count += 1
                while not seen[r]:
                    seen[r] = True
                    r = nxt[r]
        return count

    def _row_successor(self) -> list[int]:
        # row r -> X at column xpos[r] -> up/down the column to that column's O
        orow = self.o_row_of_col()
        return [orow[c] for c in self.xpos]


GridDiagram = OrientedGridDiagram


def validate_grid(G: OrientedGridDiagram) -> list[Problem]:
    """Every violated grid-diagram condition; an empty list means valid."""
    problems: list[Problem] = []
    n = G.n
    if len(G.opos) != n:
        return [Problem("shape", f"X has {n} rows but O has {len(G.opos)}")]
    if n < 2:
        problems.append(Problem("size", f"grid size {n} < 2"))
    for name, pos in (("X", G.xpos), ("O", G.opos)):
        bad = [(r, c) for r, c in enumerate(pos) if not 0 <= c < n]
        for r, c in bad:
            problems.append(Problem("range", f"{name} in row {r} at column {c} outside [0,{n})", (r, c)))
        counts: dict[int, list[int]] = {}
        for r, c in enumerate(pos):
            counts.setdefault(c, []).append(r)
        for c, rows in sorted(counts.items()):
            if len(rows) > 1 and 0 <= c < n:
                problems.append(
                    Problem("multiplicity", f"row/column multiplicity: column {c} has {len(rows)} {name} markings (rows {rows})", (c,))
                )
        for c in range(n):
            if c not in counts:
                problems.append(Problem("multiplicity", f"row/column multiplicity: column {c} has no {name} marking", (c,)))
    for r in range(n):
        if G.xpos[r] == G.opos[r]:
            problems.append(Problem("collision", f"X and O share cell (column {G.xpos[r]}, row {r})", (G.xpos[r], r)))
    return problems


# -- segments and crossings ---------------------------------------------------

def row_span(G: OrientedGridDiagram, r: int) -> tuple[int, int]:
    a, b = G.xpos[r], G.opos[r]
    return (a, b) if a < b else (b, a)


def col_span(G: OrientedGridDiagram, c: int, xrow=None, orow=None) -> tuple[int, int]:
    xrow = G.x_row_of_col() if xrow is None else xrow
    orow = G.o_row_of_col() if orow is None else orow
    a, b = xrow[c], orow[c]
    return (a, b) if a < b else (b, a)


def crossings(G: OrientedGridDiagram) -> list[tuple[int, int]]:
    """Transverse intersections as ``(column, row)``: column segment over row segment."""
    xrow, orow = G.x_row_of_col(), G.o_row_of_col()
    out = []
    for c in range(G.n):
        lo, hi = col_span(G, c, xrow, orow)
        for r in range(lo + 1, hi):
            a, b = row_span(G, r)
            if a < c < b:
                out.append((c, r))
    return out


def interleaved_spans(s1: tuple[int, int], s2: tuple[int, int]) -> bool:
    """Distinct endpoints that alternate between the two spans."""
    a1, a2 = sorted(s1)
    b1, b2 = sorted(s2)
    if len({a1, a2, b1, b2}) < 4:
        return False
    return a1 < b1 < a2 < b2 or b1 < a1 < b2 < a2


# -- moves --------------------------------------------------------------------

class MoveKind(str, enum.Enum):
    STABILIZE = "stabilize"
    DESTABILIZE = "destabilize"
    COMMUTE_ROWS = "commute-rows"
    COMMUTE_COLS = "commute-cols"
    CYCLIC_ROWS = "cyclic-rows"
    CYCLIC_COLS = "cyclic-cols"


@dataclass(frozen=True)
class GridMove:
    """A grid move.

    ``index`` is the row to stabilize, the column to destabilize, the lower
    row / left column of a commutation, or the shift of a cyclic permutation.
    ``adjacent`` picks whether the new column sits beside the X or the O of
    the split row, ``x_row`` whether X keeps the lower or the upper new row.
    """

    kind: MoveKind
    index: int
    adjacent: Literal["X", "O"] = "X"
    x_row: Literal["lower", "upper"] = "lower"

    def __post_init__(self):
        object.__setattr__(self, "kind", MoveKind(self.kind))


def apply_grid_move(G: OrientedGridDiagram, m: GridMove) -> OrientedGridDiagram:
    if m.kind is MoveKind.STABILIZE:
        return stabilize(G, m.index, m.adjacent, m.x_row)
    if m.kind is MoveKind.DESTABILIZE:
        return destabilize(G, m.index)
    if m.kind is MoveKind.COMMUTE_ROWS:
        return commute_rows(G, m.index)
    if m.kind is MoveKind.COMMUTE_COLS:
        return commute_cols(G, m.index)
    if m.kind is MoveKind.CYCLIC_ROWS:
        return cyclic_permute(G, m.index, "rows")
    if m.kind is MoveKind.CYCLIC_COLS:
        return cyclic_permute(G, m.index, "cols")
    raise IllegalMove("unknown-move", str(m.kind))


def stabilize(G: OrientedGridDiagram, row: int, adjacent: str = "X", x_row: str = "lower") -> OrientedGridDiagram:
    """Split ``row`` in two and add a column between its markings.

    The new column sits next to the row's X (or O, per ``adjacent``), holding
    a new X in the O's new row and a new O in the X's new row.
    """
    n = G.n
    if not 0 <= row < n:
        raise IllegalMove("out-of-range", f"row {row} not in [0,{n})")
    if adjacent not in ("X", "O") or x_row not in ("lower", "upper"):
        raise IllegalMove("bad-parameter", f"adjacent={adjacent!r} x_row={x_row!r}")
    x, o = G.xpos[row], G.opos[row]
    anchor = x if adjacent == "X" else o
    other = o if adjacent == "X" else x
    ins = anchor if other < anchor else anchor + 1  # new column index

    def shift_col(c):
        return c + 1 if c >= ins else c

    xs, os_ = [], []
    for r in range(n):
        if r == row:
            # the old X keeps its column and gets a new O beside it; the old O
            # gets the new X
            if x_row == "lower":
                xs += [shift_col(x), ins]
                os_ += [ins, shift_col(o)]
            else:
                xs += [ins, shift_col(x)]
                os_ += [shift_col(o), ins]
        else:
            xs.append(shift_col(G.xpos[r]))
            os_.append(shift_col(G.opos[r]))
    return OrientedGridDiagram(xs, os_, G.orientation)


def destabilization_sites(G: OrientedGridDiagram) -> list[int]:
    """Columns whose markings form the 2x2 pattern a stabilization leaves behind."""
    xrow, orow = G.x_row_of_col(), G.o_row_of_col()
    sites = []
    for c in range(G.n):
        a, b = xrow[c], orow[c]
        if abs(a - b) != 1 or G.n <= 2:
            continue
        if abs(G.xpos[b] - c) == 1 or abs(G.opos[a] - c) == 1:
            if G.xpos[b] != G.opos[a]:
                sites.append(c)
    return sites


def destabilize(G: OrientedGridDiagram, column: int) -> OrientedGridDiagram:
    """Remove ``column`` and merge the two adjacent rows holding its markings."""
    n = G.n
    if not 0 <= column < n:
        raise IllegalMove("out-of-range", f"column {column} not in [0,{n})")
    if column not in destabilization_sites(G):
        raise IllegalMove("pattern-absent", f"column {column} is not a destabilization site")
    a = G.x_row_of_col()[column]  # row of the column's X; its O is the surviving O
    b = G.o_row_of_col()[column]  # row of the column's O; its X is the surviving X
    merged = (G.xpos[b], G.opos[a])
    xs, os_ = [], []
    for r in range(n):
        if r == min(a, b):
            xs.append(merged[0])
            os_.append(merged[1])
        elif r == max(a, b):
            continue
        else:
            xs.append(G.xpos[r])
            os_.append(G.opos[r])
    fix = lambda c: c - 1 if c > column else c  # noqa: E731
    return OrientedGridDiagram([fix(c) for c in xs], [fix(c) for c in os_], G.orientation)


def commute_rows(G: OrientedGridDiagram, row: int) -> OrientedGridDiagram:
    if not 0 <= row < G.n - 1:
        raise IllegalMove("out-of-range", f"rows {row},{row + 1} not both in [0,{G.n})")
    if interleaved_spans(row_span(G, row), row_span(G, row + 1)):
        raise IllegalMove("interleaved", f"rows {row} and {row + 1} have interleaved segments")
    xs, os_ = list(G.xpos), list(G.opos)
    xs[row], xs[row + 1] = xs[row + 1], xs[row]
    os_[row], os_[row + 1] = os_[row + 1], os_[row]
    return OrientedGridDiagram(xs, os_, G.orientation)


def commute_cols(G: OrientedGridDiagram, col: int) -> OrientedGridDiagram:
    if not 0 <= col < G.n - 1:
        raise IllegalMove("out-of-range", f"columns {col},{col + 1} not both in [0,{G.n})")
    if interleaved_spans(col_span(G, col), col_span(G, col + 1)):
        raise IllegalMove("interleaved", f"columns {col} and {col + 1} have interleaved segments")
    swap = {col: col + 1, col + 1: col}
    return OrientedGridDiagram(
        [swap.get(c, c) for c in G.xpos], [swap.get(c, c) for c in G.opos], G.orientation
    )


def cyclic_permute(G: OrientedGridDiagram, shift: int, direction: str = "rows") -> OrientedGridDiagram:
    """Move the bottom ``shift`` rows to the top (or leftmost columns to the right)."""
    n = G.n
    if direction == "rows":
        idx = [(r + shift) % n for r in range(n)]
        return OrientedGridDiagram([G.xpos[i] for i in idx], [G.opos[i] for i in idx], G.orientation)
    if direction == "cols":
        return OrientedGridDiagram(
            [(c - shift) % n for c in G.xpos], [(c - shift) % n for c in G.opos], G.orientation
        )
    raise IllegalMove("bad-parameter", f"direction {direction!r}")


def inverse_move(G: OrientedGridDiagram, m: GridMove) -> GridMove:
    """The move undoing ``m`` when applied to ``apply_grid_move(G, m)``."""
    if m.kind is MoveKind.STABILIZE:
        x, o = G.xpos[m.index], G.opos[m.index]
        anchor = x if m.adjacent == "X" else o
        other = o if m.adjacent == "X" else x
        return GridMove(MoveKind.DESTABILIZE, anchor if other < anchor else anchor + 1)
    if m.kind in (MoveKind.COMMUTE_ROWS, MoveKind.COMMUTE_COLS):
        return m
    if m.kind is MoveKind.CYCLIC_ROWS:
        return GridMove(MoveKind.CYCLIC_ROWS, -m.index)
    if m.kind is MoveKind.CYCLIC_COLS:
        return GridMove(MoveKind.CYCLIC_COLS, -m.index)
    raise IllegalMove("no-inverse", "destabilization has several inverses; pass the stabilization explicitly")


def legal_moves(G: OrientedGridDiagram) -> Iterator[GridMove]:
    """Every commutation and cyclic move that is legal on ``G``, plus the default stabilizations."""
    for r in range(G.n - 1):
        if not interleaved_spans(row_span(G, r), row_span(G, r + 1)):
            yield GridMove(MoveKind.COMMUTE_ROWS, r)
    for c in range(G.n - 1):
        if not interleaved_spans(col_span(G, c), col_span(G, c + 1)):
            yield GridMove(MoveKind.COMMUTE_COLS, c)
    for k in range(1, G.n):
        yield GridMove(MoveKind.CYCLIC_ROWS, k)
        yield GridMove(MoveKind.CYCLIC_COLS, k)
    for r in range(G.n):
        yield GridMove(MoveKind.STABILIZE, r)


# -- bends --------------------------------------------------------------------

class BendClass(str, enum.Enum):
    OVER = "over"
    NEUTRAL = "neutral"
    UNDER = "under"
    TWISTED = "twisted"


@dataclass(frozen=True)
class Bend:
    """The row segment and column segment meeting at one marking.

    ``row_segment`` is ``(row, lo_col, hi_col)``; ``col_segment`` is
    ``(col, lo_row, hi_row)``.  Row segments only ever pass under and column
    segments only ever pass over.
    """

    vertex: tuple[int, int]
    vertex_type: str
    row_segment: tuple[int, int, int]
    col_segment: tuple[int, int, int]
    under_count: int = field(default=0, compare=False)
    over_count: int = field(default=0, compare=False)

    @property
    def row(self) -> int:
        return self.vertex[1]


def classify_bends(G: OrientedGridDiagram, vertex_type: str = "X") -> list[tuple[Bend, BendClass]]:
    """The ``n`` bends with a vertex of the given type, one per row, with their class."""
    if vertex_type not in ("X", "O"):
        raise ValueError("vertex_type must be 'X' or 'O'")
    xrow, orow = G.x_row_of_col(), G.o_row_of_col()
    cross = crossings(G)
    under_by_row: dict[int, int] = {}
    over_by_col: dict[int, int] = {}
    for c, r in cross:
        under_by_row[r] = under_by_row.get(r, 0) + 1
        over_by_col[c] = over_by_col.get(c, 0) + 1
    out = []
    pos = G.xpos if vertex_type == "X" else G.opos
    for r in range(G.n):
        c = pos[r]
        lo, hi = row_span(G, r)
        clo, chi = col_span(G, c, xrow, orow)
        u, o = under_by_row.get(r, 0), over_by_col.get(c, 0)
        bend = Bend((c, r), vertex_type, (r, lo, hi), (c, clo, chi), u, o)
        if u and o:
            cls = BendClass.TWISTED
        elif o:
            cls = BendClass.OVER
        elif u:
            cls = BendClass.UNDER
        else:
            cls = BendClass.NEUTRAL
        out.append((bend, cls))
    return out


def untwist(G: OrientedGridDiagram, vertex_type: str = "X") -> OrientedGridDiagram:
    """Stabilize at the vertex of each twisted bend until none remain.

    Each stabilization puts the new column beside the bend's vertex, which
    splits the bend into a pure-under and a pure-over (or neutral) bend and
    leaves every other crossing in place.
    """
    while True:
        twisted = [b for b, cls in classify_bends(G, vertex_type) if cls is BendClass.TWISTED]
        if not twisted:
            return G
        G = stabilize(G, twisted[0].row, adjacent=vertex_type)


def count_twisted(G: OrientedGridDiagram, vertex_type: str = "X") -> int:
    return sum(1 for _, cls in classify_bends(G, vertex_type) if cls is BendClass.TWISTED)


def grid_from_cells(x_cells: Sequence[tuple[int, int]], o_cells: Sequence[tuple[int, int]], orientation=Plane.XY) -> OrientedGridDiagram:
    """Build a grid from ``(column, row)`` cells; raises if rows repeat."""
    n = len(x_cells)
    xs = [-1] * n
    os_ = [-1] * n
    for c, r in x_cells:
        if xs[r] != -1:
            raise InvalidGrid(f"row {r} has two X markings")
        xs[r] = c
    for c, r in o_cells:
        if os_[r] != -1:
            raise InvalidGrid(f"row {r} has two O markings")
        os_[r] = c
    return OrientedGridDiagram(xs, os_, orientation)
