from fractions import Fraction

import pytest

from ccx.arith import dot
from ccx.convex import (Functional, Inseparable, NotAMember, SeparationResult, SublinearFunc, check_domination,
                        core_of, gauge_eval, hahn_banach_extend, hahn_banach_via_separation, is_absorbing,
                        is_nonconstant_on, is_normal, lin_of, normal_cone, properly_separate, separate_point,
                        sublevel_open)
from ccx.errors import DominationError, PreconditionUnmet
from ccx.lp import in_convex_hull
from ccx.polyhedra import Cone, Constraint, HPolyhedron, Openness, interior_point, is_empty, same_set

L1_NORM = SublinearFunc.from_coeffs([(1, 1), (1, -1), (-1, 1), (-1, -1)])


def test_core_of_square(square):
    core = core_of(square)
    assert core.openness is Openness.OPEN
    assert same_set(core, square.as_open())
    assert same_set(core_of(core), core)


def test_core_of_lower_dimensional_set():
    segment = HPolyhedron.from_rows(2, [((0, 1), 0), ((0, -1), 0), ((1, 0), 1), ((-1, 0), 1)])
    assert is_empty(core_of(segment))


def test_closure_of_half_open_ray():
    ray = HPolyhedron(2, (Constraint((0, 1), 0), Constraint((0, -1), 0), Constraint((1, 0), 0, True)))
    expected = HPolyhedron.from_rows(2, [((0, 1), 0), ((0, -1), 0), ((1, 0), 0)])
    assert ray.openness is Openness.MIXED
    assert same_set(lin_of(ray), expected)
    assert lin_of(ray).contains((0, 0))
    assert not ray.contains((0, 0))


def test_closure_of_empty_set():
    assert is_empty(lin_of(HPolyhedron.empty(2)))


def test_gauge(square):
    assert is_absorbing(square)
    assert gauge_eval(square, (2, 1)) == 2
    assert gauge_eval(square, (Fraction(1, 2), Fraction(-1, 4))) == Fraction(1, 2)
    assert gauge_eval(square, (0, 0)) == 0


def test_gauge_needs_absorbing_set():
    shifted = HPolyhedron.box((1,), (2,))
    assert not is_absorbing(shifted)
    with pytest.raises(PreconditionUnmet):
        gauge_eval(shifted, (1,))


def test_gauge_of_sublevel_set():
    omega = sublevel_open(L1_NORM)
    assert omega.openness is Openness.OPEN
    for x in [(1, 2), (-3, 1), (0, 0), (Fraction(1, 3), Fraction(-2, 3))]:
        x = tuple(Fraction(v) for v in x)
        assert gauge_eval(omega, x) == L1_NORM(x)


def test_nonconstancy(square):
    assert is_nonconstant_on(Functional((1, 0)), square)
    halfplane = HPolyhedron.from_rows(2, [((1, 0), 0)])
    assert is_nonconstant_on(Functional((0, 1)), halfplane)
    line = HPolyhedron.from_rows(2, [((1, 0), 0), ((-1, 0), 0)])
    assert not is_nonconstant_on(Functional((1, 0)), line)


def test_normal_cone(square):
    assert normal_cone(square, (1, 1)).same_cone(Cone(2, ((1, 0), (0, 1))))
    assert normal_cone(square, (1, 0)).same_cone(Cone(2, ((1, 0),)))
    assert normal_cone(square, (0, 0)).is_trivial
    assert isinstance(normal_cone(square, (2, 0)), NotAMember)
    assert is_normal(square, (1, 1), (2, 3))
    assert not is_normal(square, (1, 0), (0, 1))


def test_normal_cone_on_open_set_uses_closure(square):
    cone = normal_cone(square.as_open(), (1, 1))
    assert cone.same_cone(Cone(2, ((1, 0), (0, 1))))


def test_separate_point(square):
    result = separate_point(square, (2, 0))
    assert isinstance(result, SeparationResult)
    assert result.functional.coeffs == (1, 0)
    assert result.level == 1
    assert result.functional(result.witness_lo) < result.functional(result.witness_hi)


def test_separate_boundary_point(square):
    result = separate_point(square, (1, 0))
    assert isinstance(result, SeparationResult)
    assert result.level == 1
    assert result.level_hi == 1


def test_point_in_core_is_inseparable(square):
    result = separate_point(square, (0, 0))
    assert isinstance(result, Inseparable)
    assert result.reason == 'point in core'


def test_open_set_gets_strict_certificate(square):
    result = separate_point(square.as_open(), (1, 0))
    assert isinstance(result, SeparationResult)
    assert result.strict


def test_separation_needs_core():
    segment = HPolyhedron.from_rows(2, [((0, 1), 0), ((0, -1), 0), ((1, 0), 1), ((-1, 0), 1)])
    with pytest.raises(PreconditionUnmet):
        separate_point(segment, (3, 0))


def test_properly_separate(unit_square):
    far = unit_square.translated((3, 0))
    result = properly_separate(unit_square, far)
    assert isinstance(result, SeparationResult)
    f = result.functional
    assert not f.is_zero
    assert result.level <= result.level_hi
    assert f(result.witness_lo) < f(result.witness_hi)
    assert result.witness_lo == interior_point(unit_square)
    assert result.witness_hi == interior_point(far)

    touching = unit_square.translated((1, 0))
    assert isinstance(properly_separate(unit_square, touching), SeparationResult)

    overlapping = unit_square.translated((Fraction(1, 2), 0))
    assert isinstance(properly_separate(unit_square, overlapping), Inseparable)


def _dominated(p, f):
    return in_convex_hull(tuple(f), p.coeff_rows)


def test_hahn_banach_l1_midpoint():
    basis = ((1,), (0,))
    f = hahn_banach_extend(L1_NORM, basis, (1,))
    assert f.coeffs == (1, 0)


def test_hahn_banach_via_separation_l1():
    basis = ((1,), (0,))
    f = hahn_banach_via_separation(L1_NORM, basis, (1,))
    assert f((1, 0)) == 1
    assert _dominated(L1_NORM, f.coeffs)


def test_hahn_banach_on_plane_in_space():
    p = SublinearFunc.from_coeffs([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)])
    basis = ((1, 0), (1, 1), (0, 1))
    values = (Fraction(1, 3), Fraction(1, 3))
    for construct in (hahn_banach_extend, hahn_banach_via_separation):
        f = construct(p, basis, values)
        assert dot(f.coeffs, (1, 1, 0)) == Fraction(1, 3)
        assert dot(f.coeffs, (0, 1, 1)) == Fraction(1, 3)
        assert _dominated(p, f.coeffs)


def test_domination_failure():
    basis = ((1,), (0,))
    with pytest.raises(DominationError) as info:
        hahn_banach_extend(L1_NORM, basis, (2,))
    assert info.value.witness is not None
    with pytest.raises(DominationError):
        check_domination(L1_NORM, [(Fraction(1), Fraction(0))], [Fraction(2)])


def test_separation_construction_preconditions():
    basis = ((1,), (0,))
    with pytest.raises(PreconditionUnmet):
        hahn_banach_via_separation(L1_NORM, basis, (0,))
    linear = SublinearFunc.from_coeffs([(1, 1)])
    with pytest.raises(PreconditionUnmet):
        hahn_banach_via_separation(linear, basis, (1,))
