import itertools

import pytest

from cubeknot import fixtures as fx
from cubeknot.cubediag import (
    CubeDiagram,
    CubeMove,
    FlatRef,
    apply_cube_move,
    canonicalize,
    commute,
    crossing_census,
    destabilization_sites,
    destabilize,
    enumerate_cubes,
    from_permutations,
    interleaved,
    is_valid,
    legal_commutations,
    num_components,
    placement_candidates,
    project_cube,
    rotate,
    stabilize,
    traverse_link,
    validate_cube,
)
from cubeknot.errors import IllegalMove, InvalidCube
from cubeknot.griddiag import OrientedGridDiagram, validate_grid
from cubeknot.lattice import Plane

SMALL = list(enumerate_cubes(2)) + list(enumerate_cubes(3))


def test_u2_valid():
    u = fx.u2()
    assert validate_cube(u) == []
    assert u.n == 2


def test_u2_with_swapped_z_is_invalid():
    u = fx.u2()
    bad = CubeDiagram(u.X, u.Y, [(1, 0, 0), (0, 1, 1)])
    assert not is_valid(bad)
    with pytest.raises(InvalidCube):
        bad.check()


def test_validate_catches_collision_and_range():
    u = fx.u2()
    codes = {p.code for p in validate_cube(CubeDiagram(u.X, [u.X[0], u.Y[1]], u.Z))}
    assert "collision" in codes
    codes = {p.code for p in validate_cube(CubeDiagram(u.X, u.Y, [(2, 0, 1), (0, 1, 0)]))}
    assert "range" in codes


def test_crossing_problem_quotes_condition():
    probs = validate_cube(fx.surgery_input())
    assert [p.code for p in probs] == ["crossing-yz"]
    assert "z" in str(probs[0]) and "y" in str(probs[0])


def test_u2_projections():
    u = fx.u2()
    for plane in Plane:
        g = project_cube(u, plane)
        assert g.n == 2 and validate_grid(g) == []
    # in the zx plane coordinates are (z, x)
    g = project_cube(u, "zx")
    assert (g.xpos, g.opos) == ((1, 0), (0, 1))


def test_traversal():
    u = fx.u2()
    comps = traverse_link(u)
    assert len(comps) == 1 and len(comps[0]) == 6
    assert [t for t, _ in comps[0][:3]] in (["X", "Y", "Z"], ["Y", "Z", "X"], ["Z", "X", "Y"])
    assert num_components(fx.split_u2_pair()) == 2
    assert num_components(fx.gt5_cube()) == 1


def test_direct_sum_valid():
    s = fx.split_u2_pair()
    assert s.n == 4 and is_valid(s)


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_cubes(2)) == 4
    assert sum(1 for _ in enumerate_cubes(3)) == 42


def test_enumeration_matches_brute_force_n2():
    # brute force over all placements of 6 markings in the 2x2x2 cube
    cells = list(itertools.product(range(2), repeat=3))
    found = set()
    for X in itertools.combinations(cells, 2):
        for Y in itertools.combinations(cells, 2):
            for Z in itertools.combinations(cells, 2):
                c = CubeDiagram(X, Y, Z)
                if is_valid(c):
                    found.add(c.key())
    assert found == {c.key() for c in enumerate_cubes(2)}


def test_from_permutations_u2():
    c = from_permutations((0, 1), (0, 1), (1, 0))
    assert c.same_as(fx.u2())


@pytest.mark.parametrize("cube", SMALL[:12], ids=lambda c: str(c.key()))
def test_rotation_preserves_validity(cube):
    for k in range(3):
        assert is_valid(rotate(cube, k))
    assert rotate(cube, 3).same_as(cube)


def test_rotation_permutes_projections():
    c = fx.gt5_cube()
    r = rotate(c, 1)
    # (x,y,z) -> (z,x,y): the old xy grid becomes the new yz grid
    a, b = project_cube(r, Plane.YZ), project_cube(c, Plane.XY)
    assert (a.xpos, a.opos) == (b.xpos, b.opos)


def test_interleaved_u2_flats():
    u = fx.u2()
    for ax in range(3):
        assert not interleaved(u, FlatRef(ax, 0), FlatRef(ax, 1))


def test_interleaved_needs_parallel_flats():
    with pytest.raises(ValueError):
        interleaved(fx.u2(), FlatRef(0, 0), FlatRef(1, 0))


def test_u2_commutations():
    u = fx.u2()
    assert legal_commutations(u) == [FlatRef(0, 0), FlatRef(1, 0), FlatRef(2, 0)]
    for f in legal_commutations(u):
        assert is_valid(commute(u, f))


def test_commute_out_of_range():
    with pytest.raises(IllegalMove) as e:
        commute(fx.u2(), FlatRef(0, 1))
    assert e.value.reason == "out-of-range"


def test_commute_interleaved_rejected():
    cube = fx.gt5_cube()
    assert legal_commutations(cube) == []
    with pytest.raises(IllegalMove) as e:
        commute(cube, FlatRef(0, 0))
    assert e.value.reason in ("interleaved", "crossing-condition")


@pytest.mark.parametrize("t", "XYZ")
def test_stabilize_u2_each_type(t):
    u = fx.u2()
    for i in range(2):
        s = stabilize(u, t, i)
        assert s.n == 3 and is_valid(s)
        assert num_components(s) == 1
        assert any(destabilize(s, tt, j).same_as(u) for tt, j in destabilization_sites(s))


def test_stabilize_destabilize_small_cubes():
    for cube in SMALL:
        for t in "XYZ":
            for i in range(cube.n):
                s = stabilize(cube, t, i)
                assert is_valid(s)
                assert num_components(s) == num_components(cube)
                assert any(destabilize(s, tt, j).same_as(cube) for tt, j in destabilization_sites(s))


def test_placement_unique_on_u2():
    u = fx.u2()
    for t in "XYZ":
        for i in range(2):
            assert len(placement_candidates(u, t, i)) == 1


def test_destabilize_without_pattern():
    with pytest.raises(IllegalMove) as e:
        destabilize(fx.gt5_cube(), "X", 0)
    assert e.value.reason == "pattern-absent"


def test_apply_cube_move_dispatch():
    u = fx.u2()
    s = apply_cube_move(u, CubeMove("stabilize", "Y", 1))
    assert s.n == 3
    with pytest.raises(IllegalMove):
        apply_cube_move(u, CubeMove("commute"))
    with pytest.raises(IllegalMove):
        apply_cube_move(u, CubeMove("twist"))


def test_projection_of_stabilization_is_grid_valid():
    s = fx.u2_stabilized()
    for plane in Plane:
        assert validate_grid(project_cube(s, plane)) == []


def test_canonicalize_idempotent():
    for cube in SMALL:
        c = canonicalize(cube)
        assert canonicalize(c) == c and c.same_as(cube)


def test_crossing_census_gt5():
    cube = fx.gt5_cube()
    assert len(crossing_census(cube, Plane.XY)) == 3
    assert all(ok for _, _, ok in crossing_census(cube, Plane.XY))


def test_project_invalid_cube_raises():
    with pytest.raises(InvalidCube):
        project_cube(fx.surgery_input(), "xy")
    g = project_cube(fx.surgery_input(), "xy", check=False)
    assert isinstance(g, OrientedGridDiagram)
