from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubeknot.lattice import FormalPointSum, HalfGrading, Plane, i_pair, j_pair, project_points

pts3 = st.lists(st.tuples(*(st.integers(-4, 4),) * 3), max_size=6)


def test_i_pair_empty():
    for p in Plane:
        assert i_pair([], [], p) == 0


def test_i_pair_single_dominated_pair():
    assert i_pair([(0, 0, 0)], [(1, 1, 1)], "xy") == 1
    assert i_pair([(1, 1, 1)], [(0, 0, 0)], "xy") == 0


def test_i_pair_two_points():
    A = [(0, 0, 0), (1, 1, 1)]
    assert i_pair(A, A, "xy") == 1


def test_i_pair_uses_plane_coordinates():
    a, b = (0, 5, 0), (1, 0, 1)
    assert i_pair([a], [b], "xy") == 0
    assert i_pair([a], [b], "zx") == 1
    assert i_pair([a], [b], "yz") == 0


def test_j_pair_value():
    A = [(0, 0, 0), (1, 1, 1)]
    assert j_pair(A, A, "xy") == 1


@given(pts3, pts3)
def test_j_symmetric(A, B):
    for p in Plane:
        assert j_pair(A, B, p) == j_pair(B, A, p)


@given(pts3, pts3, pts3)
def test_j_bilinear(A, B, C):
    lhs = j_pair(FormalPointSum.of(A) - FormalPointSum.of(C), B, "yz")
    assert lhs == j_pair(A, B, "yz") - j_pair(C, B, "yz")


@given(pts3, pts3)
def test_pair_count_bound(A, B):
    for p in Plane:
        assert i_pair(A, B, p) + i_pair(B, A, p) <= len(A) * len(B)


@given(st.permutations(range(5)), st.permutations(range(5)))
def test_self_pairing_integral(a, b):
    A = [(i, a[i], b[i]) for i in range(5)]
    for p in Plane:
        assert j_pair(A, A, p).denominator == 1


def test_zx_pairing_is_order_free():
    # dominance in (x, z) and in (z, x) is the same relation
    a, b = (0, 9, 1), (2, 0, 3)
    assert i_pair([a], [b], "zx") == 1 and i_pair([b], [a], "zx") == 0


def test_pair_count_equality_condition():
    A = [(0, 0, 0), (2, 3, 0)]
    B = [(1, 1, 0)]
    assert i_pair(A, B, "xy") + i_pair(B, A, "xy") == 2
    C = [(1, 5, 0)]  # incomparable with (2,3)
    assert i_pair(A, C, "xy") + i_pair(C, A, "xy") < 2


def test_project_points():
    assert project_points([(0, 1, 2)], "xy") == [(0, 1)]
    assert project_points([(0, 1, 2)], "yz") == [(1, 2)]
    assert project_points([(0, 1, 2)], "zx") == [(2, 0)]


@given(pts3, pts3)
def test_projection_compatibility(A, B):
    for p in Plane:
        assert j_pair(A, B, p) == j_pair(project_points(A, p), project_points(B, p))


def test_half_grading_arithmetic():
    h = HalfGrading.of(Fraction(3, 2))
    assert str(h) == "3/2"
    assert (h + HalfGrading.of(1)).value == Fraction(5, 2)
    assert HalfGrading.parse("-3/2") == -h
    assert HalfGrading.parse("4").is_integer()
    with pytest.raises(ValueError):
        HalfGrading.of(Fraction(1, 3))


def test_plane_parse():
    assert Plane.parse("ZX") is Plane.ZX
    assert Plane.ZX.coords == (2, 0) and Plane.ZX.dropped == 1
    with pytest.raises(ValueError):
        Plane.parse("xz")
