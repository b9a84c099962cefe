import math
from fractions import Fraction

import pytest

from ccx.calculus import (PolyhedralFunction, SetValuedMap, adjoint_image, argmin_set, coderivative,
                          coderivative_composition, domain_of, evaluate, func_sum, intersection_rule, map_compose,
                          map_sum, marginal_function, marginal_subdifferential, marginal_value,
                          normal_cone_sum, precompose_linear, qualification_point, shared_core_point,
                          subdifferential, sum_decompositions, value_at)
from ccx.convex import NotAMember
from ccx.errors import (ImproperFunctionError, InfiniteValueError, NotOptimalError, RepresentationError)
from ccx.oracle import check_subgradient_definitional
from ccx.polyhedra import Constraint, HPolyhedron, same_set


def interval(lo, hi):
    return HPolyhedron.box((Fraction(lo),), (Fraction(hi),))


def point(*values):
    return HPolyhedron.box(values, values)


ABS = PolyhedralFunction.max_affine([((1,), 0), ((-1,), 0)])


def line_map(slope):
    """F(x) = {slope * x}"""
    return SetValuedMap(1, 1, HPolyhedron.from_rows(2, [((slope, -1), 0), ((-slope, 1), 0)]))


def cone_map():
    """gph F = {y >= |x|}"""
    return SetValuedMap(1, 1, HPolyhedron.from_rows(2, [((1, -1), 0), ((-1, -1), 0)]))


def test_value_and_domain():
    F = SetValuedMap(1, 1, HPolyhedron.box((0, 0), (1, 2)))
    assert same_set(value_at(F, (Fraction(1, 2),)), interval(0, 2))
    assert same_set(domain_of(F), interval(0, 1))


def test_map_sum_and_decompositions():
    F = map_sum(line_map(1), line_map(2))
    assert same_set(F.graph, line_map(3).graph)
    pairs = sum_decompositions(line_map(1), line_map(2), (1,), (3,))
    assert same_set(pairs, point(1, 2))


def test_map_compose():
    H = map_compose(line_map(3), line_map(2))
    assert same_set(H.graph, line_map(6).graph)


def test_coderivative_of_linear_map():
    D = coderivative(line_map(2), (0,), (0,), (1,))
    assert same_set(D, point(2))
    assert isinstance(coderivative(line_map(2), (1,), (0,), (1,)), NotAMember)


def test_coderivative_of_cone_graph():
    # N((0, 0); {y >= |x|}) is generated by (1, -1) and (-1, -1)
    D = coderivative(cone_map(), (0,), (0,), (1,))
    assert same_set(D, interval(-1, 1))
    assert same_set(coderivative(cone_map(), (0,), (0,), (-1,)), HPolyhedron.empty(1))


def test_coderivative_and_argmin_are_irredundant():
    doubled = SetValuedMap(1, 1, HPolyhedron.from_rows(2, [((1, 0), 1), ((2, 0), 2), ((-1, 0), 1),
                                                          ((0, 1), 1), ((0, -1), 1)]))
    D = coderivative(doubled, (1,), (0,), (0,))
    assert len(D.constraints) == 1
    assert same_set(D, HPolyhedron.from_rows(1, [((-1,), 0)]))
    minimizers = argmin_set(PolyhedralFunction.constant(2), cone_map(), (1,))
    assert len(minimizers.constraints) == 1
    assert same_set(minimizers, HPolyhedron.from_rows(1, [((-1,), -1)]))


def test_coderivative_chain_rule_on_lines():
    F, G = line_map(2), line_map(3)
    lhs = coderivative(map_compose(G, F), (1,), (6,), (1,))
    rhs = coderivative_composition(F, G, (1,), (2,), (6,), (1,))
    assert same_set(lhs, rhs)
    assert same_set(rhs, point(6))


def test_evaluate():
    assert evaluate(ABS, (Fraction(-3),)) == 3
    indicator = PolyhedralFunction.indicator(interval(0, 1))
    assert evaluate(indicator, (Fraction(1, 2),)) == 0
    assert evaluate(indicator, (Fraction(2),)) == math.inf


def test_epigraph_must_be_closed():
    with pytest.raises(RepresentationError):
        PolyhedralFunction(1, HPolyhedron(2, (Constraint((1, -1), 0, True),)))


def test_subdifferential_of_abs():
    assert same_set(subdifferential(ABS, (0,)).set, interval(-1, 1))
    assert same_set(subdifferential(ABS, (2,)).set, point(1))
    with pytest.raises(InfiniteValueError):
        subdifferential(PolyhedralFunction.indicator(interval(0, 1)), (2,))


def test_subdifferential_of_indicator_is_normal_cone():
    indicator = PolyhedralFunction.indicator(interval(0, 1))
    at_right = subdifferential(indicator, (1,)).set
    assert same_set(at_right, HPolyhedron.from_rows(1, [((-1,), 0)]))


def test_subgradient_oracle_agrees():
    assert check_subgradient_definitional(ABS, (0,), (Fraction(1, 2),))
    assert not check_subgradient_definitional(ABS, (0,), (2,))


def test_func_sum():
    total = func_sum(ABS, PolyhedralFunction.max_affine([((1,), 0)]))
    assert evaluate(total, (Fraction(2),)) == 4
    assert evaluate(total, (Fraction(-2),)) == 0
    assert same_set(subdifferential(total, (0,)).set, interval(0, 2))


def test_improper_function_is_rejected():
    # nothing bounds t from below over x <= 1
    with pytest.raises(ImproperFunctionError):
        PolyhedralFunction(1, HPolyhedron.from_rows(2, [((1, 0), 1)]))
    nowhere = PolyhedralFunction(1, HPolyhedron.empty(2))
    assert not nowhere.is_proper


def test_chain_rule_through_adjoint():
    A = ((1, 1),)
    psi = precompose_linear(ABS, A)
    assert evaluate(psi, (Fraction(2), Fraction(-5))) == 3
    lhs = subdifferential(psi, (0, 0)).set
    rhs = adjoint_image(A, subdifferential(ABS, (0,)).set)
    expected = HPolyhedron.from_rows(2, [((1, -1), 0), ((-1, 1), 0), ((1, 0), 1), ((-1, 0), 1)])
    assert same_set(lhs, rhs)
    assert same_set(lhs, expected)


def test_marginal_function_reproduces_abs():
    phi = PolyhedralFunction.max_affine([((0, 1), 0)])
    F = cone_map()
    mu = marginal_function(phi, F)
    for x in (-2, 0, Fraction(3, 2)):
        assert evaluate(mu, (Fraction(x),)) == abs(Fraction(x))
        assert marginal_value(phi, F, (Fraction(x),)) == abs(Fraction(x))
    assert same_set(argmin_set(phi, F, (0,)), point(0))
    assert qualification_point(phi, F) is not None
    direct = subdifferential(mu, (0,)).set
    by_formula = marginal_subdifferential(phi, F, (0,), (0,))
    assert same_set(direct, interval(-1, 1))
    assert same_set(by_formula, direct)


def test_marginal_needs_a_minimizer():
    phi = PolyhedralFunction.max_affine([((0, 1), 0)])
    with pytest.raises(NotOptimalError):
        marginal_subdifferential(phi, cone_map(), (0,), (1,))


def test_improper_marginal_function():
    phi = PolyhedralFunction.max_affine([((0, 1), 0)])
    F = SetValuedMap(1, 1, HPolyhedron.from_rows(2, [((1, 0), 1), ((-1, 0), 1)]))
    with pytest.raises(ImproperFunctionError):
        marginal_function(phi, F)
    with pytest.raises(InfiniteValueError):
        marginal_value(phi, F, (0,))


def test_intersection_rule():
    left = HPolyhedron.from_rows(2, [((1, 0), 0)])
    below = HPolyhedron.from_rows(2, [((0, 1), 0)])
    rule = intersection_rule([left, below], (0, 0))
    assert rule.qualified
    assert rule.holds
    assert rule.sum_included
    assert shared_core_point([left, below]) is not None
    assert normal_cone_sum([left, below], (0, 0)).same_cone(rule.lhs)


def test_intersection_rule_without_qualification():
    upper = HPolyhedron.from_rows(2, [((0, -1), 0)])
    lower = HPolyhedron.from_rows(2, [((0, 1), 0)])
    rule = intersection_rule([upper, lower], (0, 0))
    assert not rule.qualified
    assert rule.sum_included
    assert isinstance(intersection_rule([upper, lower], (0, 1)), NotAMember)
