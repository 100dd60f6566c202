from fractions import Fraction as F

import pytest

from polyvote.linalg import DimensionError
from polyvote.polytope import (
    EventRegion,
    GeometryError,
    HalfSpace,
    HPolytope,
    UnboundedPolytopeError,
    format_hrep,
    parse_hrep,
    region_volume,
)


def ge(coeffs, rhs=0):
    return HalfSpace(tuple(F(c) for c in coeffs), ">=", F(rhs))


def le(coeffs, rhs):
    return HalfSpace(tuple(F(c) for c in coeffs), "<=", F(rhs))


def eq(coeffs, rhs):
    return HalfSpace(tuple(F(c) for c in coeffs), "=", F(rhs))


def unit_box(dim):
    rows = []
    for i in range(dim):
        e = tuple(int(i == j) for j in range(dim))
        rows.append(ge(e))
        rows.append(le(e, 1))
    return HPolytope(dim, rows)


def standard_simplex(dim):
    rows = [ge(tuple(int(i == j) for j in range(dim))) for i in range(dim)]
    rows.append(le((1,) * dim, 1))
    return HPolytope(dim, rows)


def test_constraints_normalize_to_coprime_integers():
    p = HPolytope(2, [le((F(2, 3), F(4, 3)), F(2))])
    (c,) = p.constraints
    assert c.coeffs == (1, 2) and c.rhs == 3 and c.rel == "<="


def test_ge_rows_store_as_le():
    p = HPolytope(2, [ge((1, 1), 1)])
    (c,) = p.constraints
    assert c.rel == "<=" and c.coeffs == (-1, -1) and c.rhs == -1


def test_vacuous_rows_dropped_and_false_rows_kept():
    p = HPolytope(2, [le((0, 0), 5), ge((1, 0))])
    assert len(p.constraints) == 1
    empty = HPolytope(2, [le((0, 0), -3)])
    assert empty.has_false_row()
    assert empty.volume() == 0
    assert empty.is_empty()


def test_intersect_idempotent():
    p = standard_simplex(3)
    assert p.intersect(p) == p


def test_intersect_dimension_mismatch():
    with pytest.raises(DimensionError):
        standard_simplex(2).intersect(standard_simplex(3))


def test_cube_meets_facet_plane_has_volume_zero():
    slab = unit_box(3).intersect(HPolytope(3, [ge((1, 0, 0), 1)]))
    assert not slab.is_empty()
    assert slab.volume() == 0


def test_eliminate_share_simplex_gives_standard_inequalities():
    rows = [eq((1,) * 6, 1)] + [ge(tuple(int(i == j) for j in range(6))) for i in range(6)]
    reduced = HPolytope(6, rows).eliminate_equality(5)
    expected = standard_simplex(5)
    assert reduced == expected


def test_eliminate_equality_to_segment():
    p = HPolytope(2, [eq((1, 1), 1), ge((1, 0)), ge((0, 1))])
    seg = p.eliminate_equality(1)
    assert seg.dim == 1
    verts = sorted(seg.enumerate_vertices().vertices)
    assert verts == [(0,), (1,)]


def test_eliminate_equality_requires_equality():
    with pytest.raises(GeometryError):
        standard_simplex(2).eliminate_equality(0)


def test_unit_square_vertices():
    verts = sorted(unit_box(2).enumerate_vertices().vertices)
    assert verts == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_standard_simplex_vertices():
    v = standard_simplex(5).enumerate_vertices()
    assert len(v) == 6
    assert v.denominator_lcm() == 1


def test_vertices_satisfy_constraints_with_d_tight():
    p = standard_simplex(4).intersect(HPolytope(4, [le((1, 1, 0, 0), F(1, 2))]))
    rows = p.integer_rows()
    for vert in p.enumerate_vertices().vertices:
        assert p.contains(vert)
        tight = sum(
            1
            for coeffs, rel, rhs in rows
            if sum(a * x for a, x in zip(coeffs, vert)) == rhs
        )
        assert tight >= 4


def test_unbounded_raises():
    with pytest.raises(UnboundedPolytopeError):
        HPolytope(2, [ge((1, 0)), ge((0, 1))]).enumerate_vertices()
    with pytest.raises(UnboundedPolytopeError):
        HPolytope(2, [eq((1, -1), 0)]).enumerate_vertices()


def test_diamond_needs_no_axis_bounds():
    # no single-coordinate bounds: exercises the guard-box fallback
    diamond = HPolytope(
        2, [le((1, 1), 1), le((1, -1), 1), le((-1, 1), 1), le((-1, -1), 1)]
    )
    assert len(diamond.enumerate_vertices()) == 4
    assert diamond.volume() == 2


def test_empty_with_free_direction_is_empty_not_unbounded():
    p = HPolytope(2, [ge((1, 0), 2), le((1, 0), 1)])
    assert p.enumerate_vertices().vertices == ()
    assert p.volume() == 0


def test_volume_unit_cube():
    for dim in (1, 2, 3, 4):
        assert unit_box(dim).volume() == 1


def test_volume_standard_simplex():
    assert standard_simplex(5).volume() == F(1, 120)


def test_volume_split_cube_halves():
    cube = unit_box(3)
    lower = cube.intersect(HPolytope(3, [le((1, 0, 0), F(1, 2))]))
    upper = cube.intersect(HPolytope(3, [ge((1, 0, 0), F(1, 2))]))
    assert lower.volume() + upper.volume() == 1


def test_volume_invariant_under_coordinate_permutation():
    p = standard_simplex(3).intersect(HPolytope(3, [le((2, 1, 0), 1)]))
    swapped = HPolytope(
        3,
        [
            HalfSpace((c.coeffs[1], c.coeffs[2], c.coeffs[0]), c.rel, c.rhs)
            for c in p.constraints
        ],
    )
    assert p.volume() == swapped.volume()


def test_contains():
    simplex = standard_simplex(5)
    assert simplex.contains((F(1, 6),) * 5)
    assert not simplex.contains((2, 0, 0, 0, 0))
    with pytest.raises(DimensionError):
        simplex.contains((0, 0))


def test_vertex_denominator_lcm_requires_vertices():
    empty = HPolytope(2, [le((0, 0), -1)])
    with pytest.raises(GeometryError):
        empty.enumerate_vertices().denominator_lcm()


def test_region_volume_single_term_and_cancellation():
    p = unit_box(2)
    assert region_volume(EventRegion.of(p)) == 1
    assert region_volume(EventRegion(((1, p), (-1, p)))) == 0


def test_region_validation():
    p = unit_box(2)
    with pytest.raises(ValueError):
        EventRegion(((2, p),))
    with pytest.raises(DimensionError):
        EventRegion(((1, p), (1, unit_box(3))))
    surplus = EventRegion(((1, standard_simplex(2)), (-1, unit_box(2))))
    with pytest.raises(GeometryError):
        surplus.volume()


def test_region_intersect_distributes():
    cube = unit_box(2)
    half = cube.intersect(HPolytope(2, [le((1, 0), F(1, 2))]))
    region = EventRegion(((1, cube), (-1, half)))
    meet = region.intersect(EventRegion.of(cube))
    assert meet.volume() == F(1, 2)


HREP_TEXT = """\
# toy square
dim 2
1 0 >= 0
0 1 >= 0
1 0 <= 1
0 1 <= 1
"""


def test_parse_hrep_and_round_trip():
    p = parse_hrep(HREP_TEXT)
    assert p == unit_box(2)
    assert parse_hrep(format_hrep(p)) == p


def test_parse_hrep_errors():
    with pytest.raises(ValueError):
        parse_hrep("1 0 <= 1\n")  # missing header
    with pytest.raises(ValueError):
        parse_hrep("dim 2\n1 0 < 1\n")  # bad relation
    with pytest.raises(ValueError):
        parse_hrep("dim 2\n1 0 1 <= 1\n")  # wrong arity
    with pytest.raises(ValueError):
        parse_hrep("dim 2\n1 0.5 <= 1\n")  # not a rational literal
