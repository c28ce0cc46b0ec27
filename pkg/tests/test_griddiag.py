import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubeknot import fixtures as fx
from cubeknot.errors import IllegalMove, InvalidGrid
from cubeknot.floer import homology_table
from cubeknot.griddiag import (
    BendClass,
    GridMove,
    MoveKind,
    OrientedGridDiagram,
    apply_grid_move,
    classify_bends,
    commute_rows,
    count_twisted,
    crossings,
    cyclic_permute,
    destabilization_sites,
    destabilize,
    inverse_move,
    legal_moves,
    stabilize,
    untwist,
    validate_grid,
)


@st.composite
def grids(draw, lo=2, hi=6):
    n = draw(st.integers(lo, hi))
    xs = draw(st.permutations(range(n)))
    os_ = draw(st.permutations(range(n)).filter(lambda p: all(a != b for a, b in zip(p, xs))))
    return OrientedGridDiagram(xs, os_)


def test_validate_examples():
    assert validate_grid(fx.G_U2) == []
    assert validate_grid(fx.GT5) == []
    bad = validate_grid(OrientedGridDiagram([0, 0], [1, 0]))
    assert bad and "row/column multiplicity" in str(bad[0])


def test_validate_reports_collision_and_size():
    codes = {p.code for p in validate_grid(OrientedGridDiagram([0, 1], [0, 1]))}
    assert "collision" in codes
    codes = {p.code for p in validate_grid(OrientedGridDiagram([0], [0]))}
    assert "size" in codes


def test_check_raises():
    with pytest.raises(InvalidGrid):
        OrientedGridDiagram([0, 0], [1, 1]).check()


def test_gt5_crossings_and_components():
    assert len(crossings(fx.GT5)) == 3
    assert fx.GT5.num_components() == 1
    assert fx.TWISTED_PAIR.num_components() == 2


def test_stabilize_then_destabilize_u2():
    g3 = stabilize(fx.G_U2, 0)
    assert g3.n == 3 and validate_grid(g3) == []
    assert any(destabilize(g3, c) == fx.G_U2 for c in destabilization_sites(g3))
    m = GridMove(MoveKind.STABILIZE, 0)
    assert apply_grid_move(g3, inverse_move(fx.G_U2, m)) == fx.G_U2


@pytest.mark.parametrize("adjacent", ["X", "O"])
@pytest.mark.parametrize("x_row", ["lower", "upper"])
def test_stabilization_variants_are_invertible(adjacent, x_row):
    for r in range(fx.GT5.n):
        m = GridMove(MoveKind.STABILIZE, r, adjacent, x_row)
        g = apply_grid_move(fx.GT5, m)
        assert validate_grid(g) == [] and g.n == 6
        assert apply_grid_move(g, inverse_move(fx.GT5, m)) == fx.GT5


def test_commute_interleaved_rows_is_illegal():
    # rows 0 and 1 of GT5 span [0,2] and [1,3]
    with pytest.raises(IllegalMove) as e:
        commute_rows(fx.GT5, 0)
    assert e.value.reason == "interleaved"


def test_cyclic_permute_gt5_rows():
    g = cyclic_permute(fx.GT5, 1, "rows")
    assert g.xpos == (1, 2, 3, 4, 0)
    assert validate_grid(g) == []
    assert cyclic_permute(g, -1, "rows") == fx.GT5


def test_destabilize_without_pattern():
    with pytest.raises(IllegalMove) as e:
        destabilize(fx.GT5, 0)
    assert e.value.reason == "pattern-absent"


def test_bends_u2_neutral():
    bends = classify_bends(fx.G_U2, "X")
    assert len(bends) == 2 and all(c is BendClass.NEUTRAL for _, c in bends)


def test_bends_gt5():
    bends = classify_bends(fx.GT5, "X")
    assert len(bends) == 5
    # each of the three crossings pairs a row of one bend with the column of
    # another around a 3-cycle, so three bends are twisted
    assert sum(c is BendClass.TWISTED for _, c in bends) == 3


def test_one_twisted_fixture():
    classes = [c for _, c in classify_bends(fx.ONE_TWISTED, "X")]
    assert classes.count(BendClass.TWISTED) == 1
    assert classes[3] is BendClass.TWISTED


def test_untwist_examples():
    assert untwist(fx.G_U2) == fx.G_U2
    g = untwist(fx.ONE_TWISTED)
    assert g.n == fx.ONE_TWISTED.n + 1
    assert count_twisted(g) == 0
    assert untwist(g) == g


@given(grids())
def test_untwist_property(g):
    k = count_twisted(g)
    h = untwist(g)
    assert validate_grid(h) == []
    assert count_twisted(h) == 0
    assert h.n == g.n + k
    assert len(crossings(h)) == len(crossings(g))


@given(grids())
def test_bend_twisted_iff_both_segments_cross(g):
    for bend, cls in classify_bends(g, "X"):
        assert (cls is BendClass.TWISTED) == (bend.under_count > 0 and bend.over_count > 0)


@given(grids(hi=5), st.data())
def test_moves_invertible(g, data):
    moves = list(legal_moves(g))
    m = data.draw(st.sampled_from(moves))
    h = apply_grid_move(g, m)
    assert validate_grid(h) == []
    assert apply_grid_move(h, inverse_move(g, m)) == g


def test_legal_moves_preserve_homology():
    base = homology_table(fx.GT5, normalize=True)
    for m in legal_moves(fx.GT5):
        h = apply_grid_move(fx.GT5, m)
        table = homology_table(h, normalize=True)
        if m.kind is MoveKind.STABILIZE:
            assert table.same_entries(base.times_v(1)), m
        else:
            assert table.same_entries(base), m


def test_commutation_reference_count():
    # every pair of adjacent rows in GT5 interleaves; columns likewise
    kinds = {m.kind for m in legal_moves(fx.GT5)}
    assert MoveKind.COMMUTE_ROWS not in kinds and MoveKind.COMMUTE_COLS not in kinds


def test_all_small_grids_validate_iff_permutation_pair():
    for xs, os_ in itertools.product(itertools.permutations(range(3)), repeat=2):
        g = OrientedGridDiagram(xs, os_)
        assert (validate_grid(g) == []) == all(a != b for a, b in zip(xs, os_))
