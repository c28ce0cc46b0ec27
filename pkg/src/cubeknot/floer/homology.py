"""Bigraded homology tables, the tensor check and related invariants."""

from __future__ import annotations

import hashlib
import os
from concurrent.futures import ProcessPoolExecutor
from collections import defaultdict
from dataclasses import dataclass, field

from ..cubediag import GRID_O_FAMILY, CubeDiagram, project_cube, validate_cube
from ..errors import InvalidInput
from ..griddiag import OrientedGridDiagram, validate_grid
from ..lattice import HalfGrading
from .chains import CubeComplex, FormalChain, grid_differential
from .gradings import CubeGrader, grid_gradings
from .linalg import f2_rank
from .states import axis_planes, enumerate_cube_states, enumerate_grid_states, project_state, psi

Key = tuple  # (HalfGrading M, HalfGrading | None A)


@dataclass
class BigradedDimTable:
    """``(M, A) -> dim``; ``A`` is ``None`` for tables graded by M alone."""

    entries: dict = field(default_factory=dict)
    variant: str = "tilde"
    axis: str = "-"
    normalized: bool = False
    source_hash: str = ""

    @classmethod
    def from_ints(cls, mapping: dict, **kw) -> "BigradedDimTable":
        """Build from ``{(M, A): dim}`` with plain numbers (or ``p/2`` strings)."""
        ents = {}
        for (m, a), d in mapping.items():
            ents[(_hg(m), None if a is None else _hg(a))] = d
        return cls(ents, **kw)

    def as_ints(self) -> dict:
        """``{(M, A): dim}`` with Fractions or ints for comparison in tests."""
        out = {}
        for (m, a), d in self.entries.items():
            out[(_num(m), None if a is None else _num(a))] = d
        return out

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def clean(self) -> "BigradedDimTable":
        self.entries = {k: v for k, v in self.entries.items() if v}
        return self

    def same_entries(self, other: "BigradedDimTable") -> bool:
        return self.clean().entries == other.clean().entries

    def convolve(self, other: "BigradedDimTable") -> "BigradedDimTable":
        """Bigraded tensor product."""
        out: dict = defaultdict(int)
        for (m1, a1), d1 in self.entries.items():
            for (m2, a2), d2 in other.entries.items():
                a = None if a1 is None or a2 is None else a1 + a2
                out[(m1 + m2, a)] += d1 * d2
        return BigradedDimTable(dict(out), self.variant, self.axis, self.normalized).clean()

    def times_v(self, k: int = 1) -> "BigradedDimTable":
        """Tensor with ``V^k``, V spanned by bigradings (0,0) and (-1,-1)."""
        v = BigradedDimTable.from_ints({(0, 0): 1, (-1, -1): 1})
        out = self
        for _ in range(k):
            out = out.convolve(v)
        return out

    def shifted(self, dm, da) -> "BigradedDimTable":
        dm, da = HalfGrading.of(dm), HalfGrading.of(da)
        ents = {(m + dm, None if a is None else a + da): d for (m, a), d in self.entries.items()}
        return BigradedDimTable(ents, self.variant, self.axis, self.normalized, self.source_hash)

    def equal_up_to_shift(self, other: "BigradedDimTable") -> bool:
        a, b = self.clean(), other.clean()
        if not a.entries or not b.entries:
            return a.entries == b.entries
        ka, kb = max(a.entries), max(b.entries)
        dm = kb[0] - ka[0]
        da = HalfGrading(0) if ka[1] is None else kb[1] - ka[1]
        return a.shifted(dm, da).entries == b.entries

    def euler(self) -> dict[int, int]:
        """``sum (-1)^M t^A dim`` as ``{2A: coefficient}``."""
        out: dict[int, int] = defaultdict(int)
        for (m, a), d in self.entries.items():
            if a is None:
                raise ValueError("Euler characteristic needs an Alexander grading")
            if not m.is_integer():
                raise ValueError("non-integral Maslov grading")
            out[a.twice] += d if m.twice % 4 == 0 else -d
        return {k: v for k, v in out.items() if v}

    def sorted_items(self):
        def key(item):
            (m, a), _ = item
            return (m.twice, -(10**9) if a is None else a.twice)

        return sorted(self.clean().entries.items(), key=key, reverse=True)

    def to_text(self) -> str:
        lines = [
            f"# poincare variant={self.variant} axis={self.axis} "
            f"normalized={'true' if self.normalized else 'false'} hash={self.source_hash or '-'}"
        ]
        for (m, a), d in self.sorted_items():
            lines.append(f"M={m} A={'*' if a is None else a} dim={d}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BigradedDimTable":
        table = cls()
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                for tok in line[1:].split():
                    if "=" in tok:
                        k, v = tok.split("=", 1)
                        if k == "variant":
                            table.variant = v
                        elif k == "axis":
                            table.axis = v
                        elif k == "normalized":
                            table.normalized = v == "true"
                        elif k == "hash":
                            table.source_hash = "" if v == "-" else v
                continue
            fields = dict(tok.split("=", 1) for tok in line.split())
            a = None if fields["A"] == "*" else HalfGrading.parse(fields["A"])
            table.entries[(HalfGrading.parse(fields["M"]), a)] = int(fields["dim"])
        return table


def _hg(v) -> HalfGrading:
    if isinstance(v, str):
        return HalfGrading.parse(v)
    return HalfGrading.of(v)


def _num(h: HalfGrading):
    v = h.value
    return int(v) if v.denominator == 1 else v


# -- laurent helpers for Euler characteristics -------------------------------------

def laurent_mul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = defaultdict(int)
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[ea + eb] += ca * cb
    return {k: v for k, v in out.items() if v}


def laurent_pow(a: dict[int, int], k: int) -> dict[int, int]:
    out = {0: 1}
    for _ in range(k):
        out = laurent_mul(out, a)
    return out


def unit_normal(p: dict[int, int]) -> tuple:
    """Canonical representative modulo multiplication by ``+/- t^k``."""
    if not p:
        return ()
    lo = min(p)
    sign = 1 if p[max(p)] > 0 else -1
    return tuple(sorted((e - lo, sign * c) for e, c in p.items()))


# -- homology ------------------------------------------------------------------------

def _rank_blocks(gens: dict, edges: dict) -> dict:
    """Homology dimension per block for a graded map lowering M by one.

    ``gens`` maps block key -> ordered list of states; ``edges`` maps state
    -> set of target states (already reduced mod 2).
    """
    index = {k: {s: i for i, s in enumerate(v)} for k, v in gens.items()}
    block_of = {s: k for k, v in gens.items() for s in v}
    out_rank: dict = {}
    in_rank: dict = defaultdict(int)
    for k, states in gens.items():
        by_target: dict = defaultdict(list)
        for s in states:
            row_by_block: dict = defaultdict(int)
            for t in edges.get(s, ()):
                tb = block_of[t]
                row_by_block[tb] ^= 1 << index[tb][t]
            for tb, bits in row_by_block.items():
                by_target[tb].append(bits)
        total = 0
        for tb, rows in by_target.items():
            r = f2_rank(rows)
            total += r
            in_rank[tb] += r
        out_rank[k] = total
    return {k: len(v) - out_rank[k] - in_rank[k] for k, v in gens.items()}


def _diagram_hash(obj) -> str:
    from ..toolkit.io import serialize

    return hashlib.sha256(serialize(obj).encode()).hexdigest()[:16]


def _table(gens_grading: dict, diff: dict, variant: str) -> dict:
    """Shared tail: group states, check the differential's grading, rank blocks."""
    gens: dict = defaultdict(list)
    for s, key in gens_grading.items():
        gens[key].append(s)
    edges = {}
    for s, targets in diff.items():
        m, a = gens_grading[s]
        for t in targets:
            mt, at = gens_grading[t]
            if mt.twice != m.twice - 2:
                raise AssertionError(f"differential does not lower M by one: {s} -> {t}")
            if variant == "tilde" and at != a:
                raise AssertionError(f"tilde differential changes A: {s} -> {t}")
        edges[s] = targets
    dims = _rank_blocks(dict(gens), edges)
    return {k: v for k, v in dims.items() if v}


def grid_homology_table(G: OrientedGridDiagram, variant: str = "tilde", normalize: bool = False) -> BigradedDimTable:
    if validate_grid(G):
        raise InvalidInput("invalid grid diagram", validate_grid(G))
    if variant not in ("tilde", "filtered-hat"):
        raise InvalidInput(f"homology variant must be tilde or filtered-hat, not {variant!r}")
    grading = {}
    diff = {}
    for s in enumerate_grid_states(G.n):
        m, a = grid_gradings(G, s, normalize)
        grading[s] = (m, a if variant == "tilde" else None)
        diff[s] = {t for _, t in grid_differential(G, s, variant)}
    dims = _table(grading, diff, variant)
    return BigradedDimTable(dims, variant, "-", normalize, _diagram_hash(G))


def cube_homology_table(cube: CubeDiagram, axis: str = "y", variant: str = "tilde", normalize: bool = False) -> BigradedDimTable:
    problems = validate_cube(cube)
    if problems:
        raise InvalidInput("invalid cube diagram", problems)
    if variant not in ("tilde", "filtered-hat"):
        raise InvalidInput(f"homology variant must be tilde or filtered-hat, not {variant!r}")
    states = list(enumerate_cube_states(cube.n))
    workers = thread_count()
    if workers > 1 and len(states) >= 2000:
        chunks = [states[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_cube_chunk, [(cube, axis, variant, normalize, c) for c in chunks]))
    else:
        parts = [_cube_chunk((cube, axis, variant, normalize, states))]
    grading = {}
    diff = {}
    for g_part, d_part in parts:
        grading.update(g_part)
        diff.update(d_part)
    dims = _table(grading, diff, variant)
    return BigradedDimTable(dims, variant, axis, normalize, _diagram_hash(cube))


def _cube_chunk(args):
    cube, axis, variant, normalize, states = args
    grader = CubeGrader(cube)
    cx = CubeComplex(cube, axis, variant)
    grading = {}
    diff = {}
    for s in states:
        g = grader.gradings(s, axis, normalize)
        grading[s] = (g.M, g.A if variant == "tilde" else None)
        diff[s] = {t for _, t in cx.differential(s)}
    return grading, diff


def thread_count() -> int:
    """Worker cap from ``CUBEKNOT_THREADS``, else the CPU count."""
    raw = os.environ.get("CUBEKNOT_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            return 1
    return os.cpu_count() or 1


def homology_table(diagram, axis: str | None = "y", variant: str = "tilde", normalize: bool = False) -> BigradedDimTable:
    if isinstance(diagram, OrientedGridDiagram):
        return grid_homology_table(diagram, variant, normalize)
    if isinstance(diagram, CubeDiagram):
        return cube_homology_table(diagram, axis or "y", variant, normalize)
    raise InvalidInput(f"cannot compute homology of {type(diagram).__name__}")


# -- tensor factorization ------------------------------------------------------------

def variable_maps(cube: CubeDiagram, axis: str) -> tuple[list[int], list[int]]:
    """For each projection of ``axis``: grid O row -> index of the cube variable."""
    maps = []
    for plane in axis_planes(axis):
        p, q = plane.coords
        fam = cube.family(GRID_O_FAMILY[plane])
        row_to_var = [0] * cube.n
        for k, c in enumerate(fam):
            row_to_var[c[q]] = k
        maps.append(row_to_var)
    return maps[0], maps[1]


def _rename(mono, row_to_var, slot: int, n: int):
    exps = [0] * (2 * n)
    for r, e in enumerate(mono):
        exps[slot * n + row_to_var[r]] += e
    return tuple(exps)


def check_tensor_iso(cube: CubeDiagram, axis: str = "y", variant: str = "minus", complex_=None) -> bool:
    """Term-for-term chain-map identity ``d psi = psi (d x 1 + 1 x d)`` on all generators.

    Also requires ``psi`` to be a bijection onto the cube states.
    """
    n = cube.n
    p1, p2 = axis_planes(axis)
    g1, g2 = project_cube(cube, p1), project_cube(cube, p2)
    m1, m2 = variable_maps(cube, axis)
    cx = complex_ if complex_ is not None else CubeComplex(cube, axis, variant)
    states1 = list(enumerate_grid_states(n))
    states2 = list(enumerate_grid_states(n))
    d1 = {s: list(grid_differential(g1, s, variant)) for s in states1}
    d2 = {s: list(grid_differential(g2, s, variant)) for s in states2}
    seen = set()
    for s1 in states1:
        for s2 in states2:
            s = psi(s1, s2, axis)
            if s in seen or project_state(s, p1) != s1 or project_state(s, p2) != s2:
                return False
            seen.add(s)
            want = FormalChain()
            for mono, t1 in d1[s1]:
                want.add(_rename(mono, m1, 0, n), psi(t1, s2, axis))
            for mono, t2 in d2[s2]:
                want.add(_rename(mono, m2, 1, n), psi(s1, t2, axis))
            if cx.differential(s) != want:
                return False
    return len(seen) == len(states1) * len(states2)
