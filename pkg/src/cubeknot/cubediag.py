"""Cube diagrams: validation, projections, link traversal and cube moves.

A cube diagram of size ``n`` holds ``n`` markings of each type X, Y, Z as
integer cells in ``[0, n)^3``.  The link runs X -> Y parallel to z,
Y -> Z parallel to x and Z -> X parallel to y.  Crossing conditions:

* (x,y) projection: the x-parallel segment has the smaller z;
* (y,z) projection: the y-parallel segment has the smaller x;
* (z,x) projection: the z-parallel segment has the smaller y.

The definition is invariant under :func:`rotate`, the cyclic relabelling
``x -> y -> z -> x`` together with ``X -> Y -> Z -> X``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import IllegalMove, InvalidCube
from .griddiag import OrientedGridDiagram, Problem, interleaved_spans
from .lattice import AXES, Cell3, Plane

TYPES = "XYZ"
# travel axis of the segment leaving a marking of each type
_OUT_AXIS = {"X": 2, "Y": 0, "Z": 1}
_NEXT = {"X": "Y", "Y": "Z", "Z": "X"}
_PREV = {"X": "Z", "Y": "X", "Z": "Y"}
# marking type sitting at the right-angle vertex of an a-flat
VERTEX_TYPE = {0: "X", 1: "Y", 2: "Z"}

# Projection marking rule: which cube family becomes the grid X, which two
# become the grid O.  The first O family carries the ring variables.
GRID_X_FAMILY = {Plane.XY: "Z", Plane.YZ: "X", Plane.ZX: "Y"}
GRID_O_FAMILY = {Plane.XY: "X", Plane.YZ: "Y", Plane.ZX: "Z"}


@dataclass(frozen=True)
class FlatRef:
    axis: int
    index: int

    @classmethod
    def of(cls, axis, index: int) -> "FlatRef":
        if isinstance(axis, str):
            axis = AXES.index(axis.lower())
        return cls(int(axis), int(index))

    def __str__(self) -> str:
        return f"{AXES[self.axis]}-flat {self.index}"


@dataclass(frozen=True)
class Segment:
    start: Cell3
    end: Cell3
    axis: int  # axis of travel
    kind: str  # "XY", "YZ" or "ZX"

    @property
    def lo(self) -> int:
        return min(self.start[self.axis], self.end[self.axis])

    @property
    def hi(self) -> int:
        return max(self.start[self.axis], self.end[self.axis])

    @property
    def sign(self) -> int:
        return 1 if self.end[self.axis] > self.start[self.axis] else -1

    def fixed(self, axis: int) -> int:
        return self.start[axis]


@dataclass(frozen=True)
class CubeDiagram:
    X: tuple[Cell3, ...]
    Y: tuple[Cell3, ...]
    Z: tuple[Cell3, ...]

    def __post_init__(self):
        for name in TYPES:
            cells = tuple(tuple(int(v) for v in c) for c in getattr(self, name))
            object.__setattr__(self, name, cells)

    @property
    def n(self) -> int:
        return len(self.X)

    def family(self, t: str) -> tuple[Cell3, ...]:
        return getattr(self, t)

    def markings(self) -> Iterator[tuple[str, int, Cell3]]:
        for t in TYPES:
            for i, c in enumerate(self.family(t)):
                yield t, i, c

    def key(self) -> tuple:
        """Order-independent identity of the marking data."""
        return tuple(tuple(sorted(self.family(t))) for t in TYPES)

    def same_as(self, other: "CubeDiagram") -> bool:
        return self.key() == other.key()

    def check(self) -> "CubeDiagram":
        problems = validate_cube(self)
        if problems:
            raise InvalidCube("; ".join(map(str, problems[:5])), problems)
        return self

    def canonical(self) -> "CubeDiagram":
        return canonicalize(self)


# -- segments ----------------------------------------------------------------

def _index(cells: Iterable[Cell3], a: int, b: int) -> dict[tuple[int, int], list[Cell3]]:
    out: dict[tuple[int, int], list[Cell3]] = {}
    for c in cells:
        out.setdefault((c[a], c[b]), []).append(c)
    return out


def successor_map(cube: CubeDiagram) -> dict[tuple[str, Cell3], tuple[str, Cell3]]:
    """Follow each marking along its outgoing segment (only where unambiguous)."""
    succ = {}
    for t in TYPES:
        nxt = _NEXT[t]
        axis = _OUT_AXIS[t]
        a, b = [k for k in range(3) if k != axis]
        idx = _index(cube.family(nxt), a, b)
        for c in cube.family(t):
            targets = [d for d in idx.get((c[a], c[b]), []) if d != c]
            if len(targets) == 1:
                succ[(t, c)] = (nxt, targets[0])
    return succ


def segments(cube: CubeDiagram) -> dict[int, list[Segment]]:
    """Link segments grouped by travel axis."""
    out: dict[int, list[Segment]] = {0: [], 1: [], 2: []}
    for (t, c), (u, d) in successor_map(cube).items():
        axis = _OUT_AXIS[t]
        out[axis].append(Segment(c, d, axis, t + u))
    for axis in out:
        out[axis].sort(key=lambda s: (s.start, s.end))
    return out


def crossing_census(cube: CubeDiagram, plane: Plane | str, segs=None) -> list[tuple[Segment, Segment, bool]]:
    """All transverse crossings in a projection as ``(first-axis seg, second-axis seg, ok)``."""
    plane = Plane.parse(plane)
    a, b, c = plane.first, plane.second, plane.dropped
    segs = segments(cube) if segs is None else segs
    out = []
    for sa in segs[a]:
        for sb in segs[b]:
            if sa.lo < sb.fixed(a) < sa.hi and sb.lo < sa.fixed(b) < sb.hi:
                out.append((sa, sb, sa.fixed(c) < sb.fixed(c)))
    return out


def crossing_violations(cube: CubeDiagram, plane: Plane | str, segs=None) -> list[tuple[Segment, Segment]]:
    return [(sa, sb) for sa, sb, ok in crossing_census(cube, plane, segs) if not ok]


# -- validation ----------------------------------------------------------------

_CROSSING_TEXT = {
    Plane.XY: "the segment parallel to the x-axis must have smaller z-coordinate than the segment parallel to the y-axis",
    Plane.YZ: "the segment parallel to the y-axis must have smaller x-coordinate than the segment parallel to the z-axis",
    Plane.ZX: "the segment parallel to the z-axis must have smaller y-coordinate than the segment parallel to the x-axis",
}


def validate_cube(cube: CubeDiagram) -> list[Problem]:
    """Every violated cube-diagram condition; an empty list means valid."""
    n = cube.n
    problems: list[Problem] = []
    if not (len(cube.Y) == n and len(cube.Z) == n):
        return [Problem("shape", f"family sizes differ: X={n} Y={len(cube.Y)} Z={len(cube.Z)}")]
    if n < 2:
        problems.append(Problem("size", f"cube size {n} < 2"))
    for t, i, c in cube.markings():
        if len(c) != 3 or not all(0 <= v < n for v in c):
            problems.append(Problem("range", f"{t} marking {c} outside [0,{n})^3", (t, c)))
    if problems:
        return problems

    cells: dict[Cell3, list[str]] = {}
    for t, i, c in cube.markings():
        cells.setdefault(c, []).append(t)
    for c, ts in sorted(cells.items()):
        if len(ts) > 1:
            problems.append(Problem("collision", f"cell {c} holds several markings {ts}", (c,)))

    flats: dict[tuple[int, int], dict[str, list[Cell3]]] = {}
    for t, i, c in cube.markings():
        for axis in range(3):
            flats.setdefault((axis, c[axis]), {k: [] for k in TYPES})[t].append(c)
    for axis in range(3):
        for k in range(n):
            content = flats.get((axis, k), {t: [] for t in TYPES})
            counts = {t: len(content[t]) for t in TYPES}
            if any(v != 1 for v in counts.values()):
                problems.append(
                    Problem(
                        "flat",
                        f"{AXES[axis]}-flat {k} must hold exactly one X, one Y and one Z; has {counts}",
                        (axis, k),
                    )
                )
                continue
            vt = VERTEX_TYPE[axis]
            v = content[vt][0]
            others = [content[t][0] for t in TYPES if t != vt]
            dirs = []
            for o in others:
                diff = [ax for ax in range(3) if o[ax] != v[ax]]
                dirs.append(diff)
            if not (len(dirs[0]) == 1 and len(dirs[1]) == 1 and dirs[0] != dirs[1]):
                problems.append(
                    Problem(
                        "right-angle",
                        f"{AXES[axis]}-flat {k}: markings must form a right angle with vertex {vt} at {v}; "
                        f"others at {others}",
                        (axis, k),
                    )
                )

    succ = successor_map(cube)
    for t, i, c in cube.markings():
        if (t, c) not in succ:
            axis = _OUT_AXIS[t]
            problems.append(
                Problem(
                    "segment",
                    f"{t} marking {c} has no unique {_NEXT[t]} partner along the {AXES[axis]}-axis",
                    (t, c),
                )
            )
    if any(p.code in ("collision", "segment") for p in problems):
        return problems

    segs = segments(cube)
    for plane in Plane:
        for sa, sb in crossing_violations(cube, plane, segs):
            problems.append(
                Problem(
                    f"crossing-{plane.value}",
                    f"crossing condition in the ({plane.value[0]},{plane.value[1]})-projection: "
                    f"{_CROSSING_TEXT[plane]}; violated by {sa.kind} {sa.start}->{sa.end} and {sb.kind} {sb.start}->{sb.end}",
                    (sa, sb),
                )
            )
    return problems


def is_valid(cube: CubeDiagram) -> bool:
    return not validate_cube(cube)


# -- traversal -----------------------------------------------------------------

def traverse_link(cube: CubeDiagram) -> list[list[tuple[str, Cell3]]]:
    """Components as cyclic marking sequences X, Y, Z, X, ... in canonical order.

    Components are sorted by their smallest X cell; each starts at that X.
    """
    succ = successor_map(cube)
    if len(succ) != 3 * cube.n:
        raise InvalidCube("link segments are not well defined", validate_cube(cube))
    remaining = set(cube.X)
    comps = []
    while remaining:
        start = min(remaining)
        comp = []
        node = ("X", start)
        while True:
            comp.append(node)
            if node[0] == "X":
                remaining.discard(node[1])
            node = succ[node]
            if node == ("X", start):
                break
            if len(comp) > 3 * cube.n:
                raise InvalidCube("link traversal does not close up")
        comps.append(comp)
    return comps


def canonicalize(cube: CubeDiagram) -> CubeDiagram:
    """Reindex markings so X_i, Y_i, Z_i follow the canonical traversal."""
    try:
        comps = traverse_link(cube)
    except InvalidCube:
        return CubeDiagram(*(tuple(sorted(cube.family(t))) for t in TYPES))
    fam = {t: [] for t in TYPES}
    for comp in comps:
        for t, c in comp:
            fam[t].append(c)
    return CubeDiagram(fam["X"], fam["Y"], fam["Z"])


def num_components(cube: CubeDiagram) -> int:
    return len(traverse_link(cube))


# -- projections ----------------------------------------------------------------

def project_cube(cube: CubeDiagram, plane: Plane | str, *, check: bool = True) -> OrientedGridDiagram:
    """The oriented grid diagram seen in ``plane``."""
    plane = Plane.parse(plane)
    if check:
        problems = validate_cube(cube)
        if problems:
            raise InvalidCube(f"cannot project an invalid cube: {problems[0]}", problems)
    p, q = plane.coords
    n = cube.n
    xs = [-1] * n
    os_ = [-1] * n
    for c in cube.family(GRID_X_FAMILY[plane]):
        xs[c[q]] = c[p]
    for c in cube.family(GRID_O_FAMILY[plane]):
        os_[c[q]] = c[p]
    return OrientedGridDiagram(xs, os_, plane)


# -- symmetry and constructions --------------------------------------------------

def rotate(cube: CubeDiagram, times: int = 1) -> CubeDiagram:
    """Cyclic symmetry: ``(x,y,z) -> (z,x,y)`` with Z -> X, X -> Y, Y -> Z.

    Maps the (a,b)-projection of the input to the (a+1,b+1)-projection of the
    output (xy -> yz -> zx -> xy), preserving validity.
    """
    for _ in range(times % 3):
        r = lambda c: (c[2], c[0], c[1])  # noqa: E731
        cube = CubeDiagram([r(c) for c in cube.Z], [r(c) for c in cube.X], [r(c) for c in cube.Y])
    return cube


def rotate_cell(cell: Cell3, times: int = 1) -> Cell3:
    for _ in range(times % 3):
        cell = (cell[2], cell[0], cell[1])
    return cell


def direct_sum(a: CubeDiagram, b: CubeDiagram) -> CubeDiagram:
    """Place ``b`` diagonally after ``a``; the result is their split union."""
    k = a.n
    sh = lambda c: (c[0] + k, c[1] + k, c[2] + k)  # noqa: E731
    return canonicalize(CubeDiagram(a.X + tuple(map(sh, b.X)), a.Y + tuple(map(sh, b.Y)), a.Z + tuple(map(sh, b.Z))))


def from_permutations(alpha: Sequence[int], beta: Sequence[int], gamma: Sequence[int]) -> CubeDiagram:
    """The marking-consistent cube with ``X_i = (i, alpha_i, beta_i)``, ``Y_i = (i, alpha_i, gamma_i)``.

    Each Z is then forced: it shares (y,z) with a Y and (z,x) with an X.
    Every cube diagram arises this way (with ``gamma_i != beta_i``); the
    crossing conditions still need checking.
    """
    n = len(alpha)
    binv = [0] * n
    for i, z in enumerate(beta):
        binv[z] = i
    X = [(i, alpha[i], beta[i]) for i in range(n)]
    Y = [(i, alpha[i], gamma[i]) for i in range(n)]
    Z = [(binv[gamma[k]], alpha[k], gamma[k]) for k in range(n)]
    return CubeDiagram(X, Y, Z)


def enumerate_cubes(n: int) -> Iterator[CubeDiagram]:
    """Every cube diagram of size ``n``, canonicalized, in a deterministic order."""
    perms = list(itertools.permutations(range(n)))
    for alpha in perms:
        for beta in perms:
            for gamma in perms:
                if any(g == b for g, b in zip(gamma, beta)):
                    continue
                cube = from_permutations(alpha, beta, gamma)
                if is_valid(cube):
                    yield canonicalize(cube)


def _compress(cube_cells: dict, n_new: int) -> dict:
    """Map doubled (possibly odd) coordinates to ranks ``0..n_new-1`` per axis."""
    out = {}
    values = [sorted({c[ax] for cells in cube_cells.values() for c in cells}) for ax in range(3)]
    for ax in range(3):
        if len(values[ax]) != n_new:
            raise InvalidCube(f"compression on axis {AXES[ax]} gave {len(values[ax])} flats, expected {n_new}")
    rank = [{v: i for i, v in enumerate(vals)} for vals in values]
    for t, cells in cube_cells.items():
        out[t] = [tuple(rank[ax][c[ax]] for ax in range(3)) for c in cells]
    return out


# -- interleaving and moves -----------------------------------------------------

def flat_segments(cube: CubeDiagram, flat: FlatRef) -> dict[int, Segment]:
    """The two segments of the cube bend in a flat, keyed by travel axis."""
    vt = VERTEX_TYPE[flat.axis]
    v = [c for c in cube.family(vt) if c[flat.axis] == flat.index]
    if len(v) != 1:
        raise InvalidCube(f"{flat} has {len(v)} {vt} markings")
    v = v[0]
    out = {}
    for axis, segs in segments(cube).items():
        for s in segs:
            if s.start == v or s.end == v:
                out[axis] = s
    return out


def interleaved(cube: CubeDiagram, f1: FlatRef, f2: FlatRef) -> bool:
    """True iff a pair of like-parallel bend segments of the two flats interleave."""
    if f1.axis != f2.axis:
        raise ValueError("flats must be parallel")
    s1, s2 = flat_segments(cube, f1), flat_segments(cube, f2)
    for axis in s1:
        if axis in s2 and interleaved_spans((s1[axis].lo, s1[axis].hi), (s2[axis].lo, s2[axis].hi)):
            return True
    return False


def commute(cube: CubeDiagram, flat: FlatRef) -> CubeDiagram:
    """Interchange flats ``index`` and ``index + 1`` along ``flat.axis``."""
    n = cube.n
    k = flat.index
    if not 0 <= k < n - 1:
        raise IllegalMove("out-of-range", f"{flat} has no neighbour {k + 1}")
    if interleaved(cube, flat, FlatRef(flat.axis, k + 1)):
        raise IllegalMove("interleaved", f"{flat} and {AXES[flat.axis]}-flat {k + 1} interleave; the swap is not an isotopy")
    ax = flat.axis
    swap = {k: k + 1, k + 1: k}

    def mv(c):
        c = list(c)
        c[ax] = swap.get(c[ax], c[ax])
        return tuple(c)

    out = CubeDiagram([mv(c) for c in cube.X], [mv(c) for c in cube.Y], [mv(c) for c in cube.Z])
    problems = validate_cube(out)
    if problems:
        raise IllegalMove("crossing-condition", f"swapping breaks the crossing conditions: {problems[0]}")
    return canonicalize(out)


def legal_commutations(cube: CubeDiagram) -> list[FlatRef]:
    out = []
    for ax in range(3):
        for k in range(cube.n - 1):
            try:
                commute(cube, FlatRef(ax, k))
            except IllegalMove:
                continue
            out.append(FlatRef(ax, k))
    return out


def _stabilize_x(cube: CubeDiagram, xcell: Cell3, with_cells: bool = False):
    """Stabilize at the X marking in ``xcell``.

    With ``Z' -> X -> Y -> Z`` consecutive, the path becomes
    ``Z' -> X -> Y1 -> Z1 -> X1 -> Y -> Z``: a new x-flat next to X toward Z,
    a new y-flat next to Y away from Z' (Y and Z move into it), and a new
    z-flat next to X toward Y holding the new triple.
    """
    succ = successor_map(cube)
    pred = {v: k for k, v in succ.items()}
    a, c, e = xcell
    _, ycell = succ[("X", xcell)]
    _, zcell = succ[("Y", ycell)]
    _, zprev = pred[("X", xcell)]
    f = ycell[2]
    b = zcell[0]
    d = zprev[1]
    sgn = lambda v: 1 if v > 0 else -1  # noqa: E731
    A, C, E = 2 * a + sgn(b - a), 2 * c - sgn(d - c), 2 * e + sgn(f - e)
    dbl = lambda p: tuple(2 * v for v in p)  # noqa: E731

    X = [dbl(p) for p in cube.X]
    Y = [dbl(p) for p in cube.Y if p != ycell]
    Z = [dbl(p) for p in cube.Z if p != zcell]
    Y += [(2 * a, 2 * c, E), (A, C, 2 * f)]  # Y1, moved Y
    Z += [(A, 2 * c, E), (2 * b, C, 2 * f)]  # Z1, moved Z
    X += [(A, C, E)]  # X1
    fam = _compress({"X": X, "Y": Y, "Z": Z, "new": [dbl(xcell), (2 * a, 2 * c, E), (A, 2 * c, E), (A, C, E)]}, cube.n + 1)
    out = CubeDiagram(fam["X"], fam["Y"], fam["Z"])
    if with_cells:
        # kept X, Y1, Z1, X1 in the new coordinates
        return out, tuple(fam["new"])
    return out


def placement_candidates(cube: CubeDiagram, marking_type: str, index: int) -> list[tuple[Cell3, Cell3, Cell3]]:
    """Brute force every placement of the three new markings in the new flat.

    Keeps the inserted flats and the moved markings of :func:`stabilize` and
    returns each ``(X, Y, Z)`` triple of cells in the new flat that gives a
    cube diagram.  Stabilization is well defined when this has one entry.
    Cost grows like ``n^6``; meant for small diagrams.
    """
    cube = canonicalize(cube)
    k = _ROT_TO_X[marking_type]
    rotated = rotate(cube, k)
    out, (_, y1, z1, x1) = _stabilize_x(rotated, rotate_cell(cube.family(marking_type)[index], k), with_cells=True)
    e = y1[2]
    m = out.n
    base = (
        [c for c in out.X if c != x1],
        [c for c in out.Y if c != y1],
        [c for c in out.Z if c != z1],
    )
    flat = [(i, j, e) for i in range(m) for j in range(m)]
    found = []
    for cx, cy, cz in itertools.product(flat, repeat=3):
        if len({cx, cy, cz}) < 3:
            continue
        cand = CubeDiagram(base[0] + [cx], base[1] + [cy], base[2] + [cz])
        if is_valid(cand):
            found.append(tuple(rotate_cell(c, -k) for c in (cx, cy, cz)))
    return found


def _destabilize_x(cube: CubeDiagram, xcell: Cell3) -> CubeDiagram:
    """Undo :func:`_stabilize_x` whose original X marking is ``xcell``."""
    n = cube.n
    if n <= 2:
        raise IllegalMove("pattern-absent", "size 2 diagrams cannot be destabilized")
    succ = successor_map(cube)
    try:
        _, y1 = succ[("X", xcell)]
        _, z1 = succ[("Y", y1)]
        _, x1 = succ[("Z", z1)]
        _, y = succ[("X", x1)]
        _, z = succ[("Y", y)]
    except KeyError:
        raise IllegalMove("pattern-absent", f"no stabilization pattern at X {xcell}") from None
    a, c, e = xcell
    a1, c1, e1 = x1
    if not (abs(a1 - a) == 1 and abs(c1 - c) == 1 and abs(e1 - e) == 1 and len({y1, z1, x1}) == 3):
        raise IllegalMove("pattern-absent", f"no stabilization pattern at X {xcell}")
    X = [p for p in cube.X if p != x1]
    Y = [p for p in cube.Y if p not in (y1, y)] + [(a, c, y[2])]
    Z = [p for p in cube.Z if p not in (z1, z)] + [(z[0], c, z[2])]

    def drop(p):
        return tuple(v - 1 if v > r else v for v, r in zip(p, (a1, c1, e1)))

    out = CubeDiagram([drop(p) for p in X], [drop(p) for p in Y], [drop(p) for p in Z])
    if validate_cube(out) or not _stabilize_x(out, drop(xcell)).same_as(cube):
        raise IllegalMove("pattern-absent", f"markings after X {xcell} are not a stabilization of a smaller diagram")
    return out


_ROT_TO_X = {"X": 0, "Y": 2, "Z": 1}  # rotations taking a marking type to X


def stabilize(cube: CubeDiagram, marking_type: str, index: int) -> CubeDiagram:
    """Cube stabilization at marking ``<type>_<index>`` (canonical 0-based index).

    Type X is the detailed pattern; Y and Z are its images under :func:`rotate`.
    """
    cube = canonicalize(cube)
    fam = cube.family(marking_type)
    if not 0 <= index < cube.n:
        raise IllegalMove("out-of-range", f"{marking_type} index {index} not in [0,{cube.n})")
    k = _ROT_TO_X[marking_type]
    rotated = rotate(cube, k)
    out = _stabilize_x(rotated, rotate_cell(fam[index], k))
    out = rotate(out, -k)
    problems = validate_cube(out)
    if problems:  # pragma: no cover - the construction is always valid
        raise IllegalMove("crossing-condition", f"stabilization produced an invalid diagram: {problems[0]}")
    return canonicalize(out)


def destabilize(cube: CubeDiagram, marking_type: str, index: int) -> CubeDiagram:
    """Inverse of :func:`stabilize`; ``index`` names the marking kept in place."""
    cube = canonicalize(cube)
    if not 0 <= index < cube.n:
        raise IllegalMove("out-of-range", f"{marking_type} index {index} not in [0,{cube.n})")
    k = _ROT_TO_X[marking_type]
    cell = cube.family(marking_type)[index]
    out = _destabilize_x(rotate(cube, k), rotate_cell(cell, k))
    return canonicalize(rotate(out, -k))


def destabilization_sites(cube: CubeDiagram) -> list[tuple[str, int]]:
    sites = []
    for t in TYPES:
        for i in range(cube.n):
            try:
                destabilize(cube, t, i)
            except IllegalMove:
                continue
            sites.append((t, i))
    return sites


@dataclass(frozen=True)
class CubeMove:
    kind: str  # "stabilize" | "destabilize" | "commute"
    marking_type: str = "X"
    index: int = 0
    flat: FlatRef | None = None


def apply_cube_move(cube: CubeDiagram, m: CubeMove) -> CubeDiagram:
    if m.kind == "commute":
        if m.flat is None:
            raise IllegalMove("bad-parameter", "commute needs a flat")
        return commute(cube, m.flat)
    if m.kind == "stabilize":
        return stabilize(cube, m.marking_type, m.index)
    if m.kind == "destabilize":
        return destabilize(cube, m.marking_type, m.index)
    raise IllegalMove("unknown-move", m.kind)


# -- fixtures --------------------------------------------------------------------

def unknot2() -> CubeDiagram:
    """The size-2 unknot ``U2``."""
    return canonicalize(
        CubeDiagram(
            [(0, 0, 0), (1, 1, 1)],
            [(0, 0, 1), (1, 1, 0)],
            [(1, 0, 1), (0, 1, 0)],
        )
    )
