from fractions import Fraction

import pytest

from ccx.errors import DimensionError, FMBudgetExceeded, RepresentationError
from ccx.oracle import InstanceSpec, enumerate_vertices_bruteforce, make_rng, random_int, random_set
from ccx.polyhedra import (Cone, Constraint, HPolyhedron, Openness, VPolyhedron, affine_image, contains_point,
                           convert_representation, eliminate_variables, h_to_v, implicit_equalities, interior_point,
                           is_empty, max_margin, product, remove_redundant, same_set, set_difference, set_includes,
                           set_sum, support, v_to_h)


def test_constraints_are_normalized():
    P = HPolyhedron(2, (Constraint((2, 4), 6), Constraint((1, 2), 3), Constraint((0, 0), 5)))
    assert P.constraints == (Constraint((1, 2), 3),)


def test_unsatisfiable_zero_row_marks_empty():
    P = HPolyhedron(2, (Constraint((1, 0), 1), Constraint((0, 0), -2)))
    assert P.is_marked_empty
    assert is_empty(P)


def test_duplicate_with_strict_keeps_strict():
    P = HPolyhedron(1, (Constraint((1,), 1), Constraint((2,), 2, strict=True)))
    assert P.constraints == (Constraint((1,), 1, True),)
    assert P.openness is Openness.OPEN


def test_openness(square):
    assert square.openness is Openness.CLOSED
    assert square.as_open().openness is Openness.OPEN
    mixed = HPolyhedron(2, (Constraint((1, 0), 0, True), Constraint((0, 1), 0)))
    assert mixed.openness is Openness.MIXED
    assert mixed.relaxed().is_closed


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        HPolyhedron(2, (Constraint((1,), 0),))


def test_membership(square):
    assert contains_point(square, (1, 1))
    assert not square.as_open().contains((1, 0))
    assert square.as_open().contains((0, 0))


def test_emptiness_respects_strictness():
    closed_point = HPolyhedron.from_rows(1, [((1,), 0), ((-1,), 0)])
    open_point = HPolyhedron.from_rows(1, [((1,), 0), ((-1,), 0)], Openness.OPEN)
    assert not is_empty(closed_point)
    assert is_empty(open_point)


def test_max_margin_and_interior(unit_square):
    margin, x = max_margin(unit_square)
    assert margin > 0
    assert unit_square.as_open().contains(x)
    assert interior_point(HPolyhedron.from_rows(1, [((1,), 0), ((-1,), 0)])) is None


def test_implicit_equalities():
    segment = HPolyhedron.from_rows(2, [((0, 1), 0), ((0, -1), 0), ((1, 0), 1), ((-1, 0), 0)])
    equalities = implicit_equalities(segment)
    assert sorted(segment.constraints[k].a for k in equalities) == [(0, -1), (0, 1)]


def test_support(triangle):
    assert support(triangle, (1, 2)).optimum == 2
    assert support(triangle, (1, 2), 'min').optimum == 0


def test_remove_redundant(unit_square):
    P = unit_square.intersect(HPolyhedron.from_rows(2, [((1, 1), 3)]))
    assert same_set(remove_redundant(P), unit_square)
    assert len(remove_redundant(P).constraints) == 4


def test_strict_redundancy():
    # x < 1 is implied by x <= 0 while x <= 1 alone is not
    P = HPolyhedron(1, (Constraint((1,), 0), Constraint((1,), 1, True)))
    assert remove_redundant(P).constraints == (Constraint((1,), 0),)
    Q = HPolyhedron(1, (Constraint((1,), 1), Constraint((1,), 1, True)))
    assert remove_redundant(Q).openness is Openness.OPEN


def test_square_vertices(unit_square):
    V = h_to_v(unit_square)
    assert V.vertices == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert V.rays == ()


def test_halfplane_has_lineality():
    V = h_to_v(HPolyhedron.from_rows(2, [((0, 1), 0)]))
    assert V.has_lineality
    assert len(V.vertices) == 1
    assert same_set(v_to_h(V), HPolyhedron.from_rows(2, [((0, 1), 0)]))


def test_triangle_round_trip(triangle):
    V = VPolyhedron(2, ((0, 0), (1, 0), (0, 1)))
    assert same_set(v_to_h(V), triangle)
    assert convert_representation(V) == v_to_h(V)


def test_conversion_refuses_open_sets(square):
    with pytest.raises(RepresentationError):
        h_to_v(square.as_open())
    with pytest.raises(RepresentationError):
        convert_representation(square.as_open())


def test_empty_conversions():
    assert h_to_v(HPolyhedron.empty(2)).is_empty
    assert is_empty(v_to_h(VPolyhedron(2)))


@pytest.mark.parametrize('seed', range(100))
def test_round_trip_matches_bruteforce(seed):
    rng = make_rng(seed)
    S = random_set(rng, InstanceSpec(dim=random_int(rng, 1, 3), constraint_budget=4))
    V = h_to_v(S)
    assert same_set(v_to_h(V), S)
    assert list(V.vertices) == enumerate_vertices_bruteforce(S)


def test_projection_of_triangle(triangle):
    projected = eliminate_variables(triangle, [1])
    assert same_set(projected, HPolyhedron.box((0,), (1,)))


def test_projection_keeps_strictness():
    open_triangle = HPolyhedron(2, (Constraint((-1, 0), 0), Constraint((0, -1), 0), Constraint((1, 1), 1, True)))
    projected = eliminate_variables(open_triangle, [1])
    assert projected.contains((0,))
    assert not projected.contains((1,))


def test_projection_budget():
    diamond = HPolyhedron.from_rows(2, [((1, 1), 1), ((1, -1), 1), ((-1, 1), 1), ((-1, -1), 1)])
    with pytest.raises(FMBudgetExceeded):
        eliminate_variables(diamond, [0], max_constraints=1)


def test_projection_budget_from_environment(monkeypatch):
    monkeypatch.setenv('CCX_MAX_FM_CONSTRAINTS', '1')
    diamond = HPolyhedron.from_rows(2, [((1, 1), 1), ((1, -1), 1), ((-1, 1), 1), ((-1, -1), 1)])
    with pytest.raises(FMBudgetExceeded):
        eliminate_variables(diamond, [0])


def test_sums(unit_square):
    assert same_set(set_sum(unit_square, unit_square), HPolyhedron.box((0, 0), (2, 2)))
    assert same_set(set_difference(unit_square, unit_square), HPolyhedron.box((-1, -1), (1, 1)))
    open_sum = set_sum(unit_square.as_open(), unit_square)
    assert open_sum.openness is Openness.OPEN
    assert same_set(open_sum, HPolyhedron.box((0, 0), (2, 2), Openness.OPEN))


def test_sum_refuses_mixed_sets(unit_square):
    mixed = HPolyhedron(2, (Constraint((1, 0), 0, True), Constraint((0, 1), 0)))
    with pytest.raises(RepresentationError):
        set_sum(mixed, unit_square)


def test_inclusion_with_strictness(unit_square):
    assert set_includes(unit_square, unit_square.as_open())
    assert not set_includes(unit_square.as_open(), unit_square)
    assert set_includes(unit_square.as_open(), HPolyhedron.box((Fraction(1, 4),) * 2, (Fraction(3, 4),) * 2))
    assert not same_set(unit_square, unit_square.as_open())


def test_product_and_image(unit_square):
    segment = HPolyhedron.box((0,), (1,))
    cube = product(unit_square, segment)
    assert same_set(cube, HPolyhedron.box((0, 0, 0), (1, 1, 1)))
    shadow = affine_image(cube, ((1, 1, 1),))
    assert same_set(v_to_h(shadow), HPolyhedron.box((0,), (3,)))


def test_pullback(unit_square):
    # {v : (v, 2v) in [0, 1]^2} = [0, 1/2]
    line = unit_square.pullback(((1,), (2,)))
    assert same_set(line, HPolyhedron.box((0,), (Fraction(1, 2),)))


def test_cones():
    quadrant = Cone(2, ((1, 0), (0, 2)))
    assert quadrant.generators == ((0, 1), (1, 0))
    assert quadrant.contains((3, 4))
    assert not quadrant.contains((-1, 0))
    assert (quadrant + Cone(2, ((-1, 0),))).same_cone(Cone(2, ((1, 0), (-1, 0), (0, 1))))
    assert same_set(quadrant.to_hpolyhedron(), HPolyhedron.from_rows(2, [((-1, 0), 0), ((0, -1), 0)]))
    assert Cone(2).is_trivial
