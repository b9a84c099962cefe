# -*- coding: utf-8 -*-
"""
Separation, gauge and Hahn-Banach suites.
"""
from fractions import Fraction

from ...arith import add, combine, dot, scale, transpose, zeros
from ...convex import (Functional, Inseparable, SeparationResult, core_of, gauge_eval, hahn_banach_extend,
                       hahn_banach_via_separation, is_absorbing, lin_of, properly_separate, separate_point,
                       sublevel_open)
from ...lp import in_convex_hull, maximize, minimize
from ...oracle import (check_core_definitional, random_int, random_matrix, random_point, random_set,
                       random_sublinear, random_vector)
from ...polyhedra import HPolyhedron, is_empty, same_set, sample_points, strictly_feasible
from ...serialization import hpolyhedron_to_json, separation_to_json, sublinear_to_json, vector_to_json
from ..runner import CaseResult, register
from ..sampling import LAMBDAS, blend, pick, candidate_points, spec_for


def _below(f: Functional, S: HPolyhedron, level: Fraction) -> bool:
    result = maximize(f.coeffs, S.rows)
    return result.is_optimal and result.optimum <= level


def _above(f: Functional, S: HPolyhedron, level: Fraction) -> bool:
    result = minimize(f.coeffs, S.rows)
    return result.is_optimal and result.optimum >= level


def valid_point_separation(result: SeparationResult, S: HPolyhedron, x0) -> bool:
    f = result.functional
    return (not f.is_zero and _below(f, S, result.level) and f(x0) >= result.level
            and f(result.witness_lo) < f(result.witness_hi) and S.relaxed().contains(result.witness_lo))


def valid_set_separation(result: SeparationResult, S1: HPolyhedron, S2: HPolyhedron) -> bool:
    f = result.functional
    return (not f.is_zero and _below(f, S1, result.level) and _above(f, S2, result.level)
            and f(result.witness_lo) < f(result.witness_hi)
            and S1.relaxed().contains(result.witness_lo) and S2.relaxed().contains(result.witness_hi))


def _set_pair(rng, dim):
    spec = spec_for(dim)
    S1 = random_set(rng, spec)
    offset = scale(random_vector(rng, dim, spec.coef_bound), random_int(rng, 0, 2))
    S2 = random_set(rng, spec).translated(offset)
    return S1, S2


@register('P3.1', 'two sets with nonempty cores are separated iff they are properly separated')
def separated_iff_proper(rng, dim):
    S1, S2 = _set_pair(rng, dim)
    result = properly_separate(S1, S2)
    dump = dict(first=hpolyhedron_to_json(S1), second=hpolyhedron_to_json(S2), result=separation_to_json(result))
    if isinstance(result, Inseparable):
        # a common core point rules out any nonzero separating functional
        w = result.witness
        return CaseResult.check(S1.as_open().contains(w) and S2.as_open().contains(w), **dump)
    return CaseResult.check(valid_set_separation(result, S1, S2), **dump)


def _outside_points(rng, S, count=3):
    """Closure samples and random points, none of them in the core"""
    candidates = pick(rng, sample_points(S), count) + [random_point(rng, S.dim, 4) for _ in range(count)]
    return [x for x in candidates if not S.as_open().contains(x)]


@register('T3.3', 'a point outside core(S) is separated from S, strictly when S is open')
def point_separation(rng, dim):
    S = random_set(rng, spec_for(dim))
    S_open = core_of(S)
    for x0 in _outside_points(rng, S):
        for target in (S, S_open):
            result = separate_point(target, x0)
            dump = dict(set=hpolyhedron_to_json(target), point=vector_to_json(x0))
            if isinstance(result, Inseparable) or not valid_point_separation(result, target, x0):
                return CaseResult.violated(**dump)
            if target is S_open and not result.strict:
                return CaseResult.violated(reason='no strict certificate for an open set', **dump)
    return CaseResult.passed()


@register('T3.4', 'separate_point succeeds iff the point is not in core(S)')
def trichotomy(rng, dim):
    S = random_set(rng, spec_for(dim))
    for x0 in candidate_points(rng, S, count=4, outside=3):
        result = separate_point(S, x0)
        absorbing = check_core_definitional(S, x0)
        dump = dict(set=hpolyhedron_to_json(S), point=vector_to_json(x0), result=separation_to_json(result))
        if isinstance(result, Inseparable) != absorbing:
            return CaseResult.violated(**dump)
        if isinstance(result, SeparationResult) and not valid_point_separation(result, S, x0):
            return CaseResult.violated(**dump)
    return CaseResult.passed()


@register('L3.5', 'gauge of {p < 1} is p for p >= 0, and gauges are sublinear')
def gauge(rng, dim):
    spec = spec_for(dim)
    p = random_sublinear(rng, dim, spec.coef_bound, nonnegative=True)
    omega = sublevel_open(p)
    if not is_absorbing(omega) or not same_set(core_of(omega), omega):
        return CaseResult.violated(p=sublinear_to_json(p), reason='{p < 1} is not open and absorbing')
    points = [random_point(rng, dim, 4) for _ in range(4)]
    for x in points:
        if gauge_eval(omega, x) != p(x):
            return CaseResult.violated(p=sublinear_to_json(p), point=vector_to_json(x))
    S = random_set(rng, spec, center=zeros(dim))
    for x in points:
        value = gauge_eval(S, x)
        for lam in (Fraction(0), Fraction(1), Fraction(2), Fraction(1, 3)):
            if gauge_eval(S, scale(x, lam)) != lam * value:
                return CaseResult.violated(set=hpolyhedron_to_json(S), point=vector_to_json(x), lam=str(lam))
        for y in points:
            if gauge_eval(S, add(x, y)) > value + gauge_eval(S, y):
                return CaseResult.violated(set=hpolyhedron_to_json(S), x=vector_to_json(x), y=vector_to_json(y))
    return CaseResult.passed()


@register('T3.7', 'a in core(S), b in lin(S): [a, b) lies in core(S)')
def interval_inclusion(rng, dim):
    S = random_set(rng, spec_for(dim))
    S_open = core_of(S)
    closure = lin_of(S_open)
    dump = dict(set=hpolyhedron_to_json(S))
    if not same_set(lin_of(closure), closure) or not same_set(core_of(lin_of(S_open)), S_open):
        return CaseResult.violated(reason='closure or core not stable', **dump)
    inner = strictly_feasible(dim, S_open.rows)
    a_points = [inner] + [blend(lam, inner, b) for lam, b in zip(LAMBDAS, pick(rng, sample_points(S), 3))]
    for a in a_points:
        for b in pick(rng, sample_points(closure), 4):
            for lam in LAMBDAS + (Fraction(1),):
                if not S_open.contains(blend(lam, a, b)):
                    return CaseResult.violated(a=vector_to_json(a), b=vector_to_json(b), lam=str(lam), **dump)
    return CaseResult.passed()


def _extension_problem(rng, dim, nonnegative, nonzero=False):
    """(p, basis, values) with g the restriction to Y of a convex combination of the pieces

    With nonzero the whole triple is drawn again until g does not vanish on Y.
    """
    bound = spec_for(dim).coef_bound
    while True:
        p = random_sublinear(rng, dim, bound, nonnegative=nonnegative)
        k = random_int(rng, 1, dim)
        basis = random_matrix(rng, dim, k, bound, full_rank=True)
        weights = [Fraction(random_int(rng, 1, 4)) for _ in p.pieces]
        total = sum(weights)
        f0 = combine([w / total for w in weights], p.coeff_rows, dim)
        values = tuple(dot(f0, column) for column in transpose(basis))
        if not nonzero or any(values):
            return p, basis, values


def certified(p, basis, values, f: Functional) -> bool:
    agrees = all(f(column) == v for column, v in zip(transpose(basis), values))
    return agrees and in_convex_hull(f.coeffs, p.coeff_rows)


def _extension_dump(p, basis, values):
    return dict(p=sublinear_to_json(p), basis=[vector_to_json(c) for c in transpose(basis)],
                values=vector_to_json(values))


@register('T3.2', 'a functional dominated by p on Y extends to a functional dominated by p')
def extension(rng, dim):
    p, basis, values = _extension_problem(rng, dim, nonnegative=random_int(rng, 0, 1) == 0)
    f = hahn_banach_extend(p, basis, values)
    return CaseResult.check(certified(p, basis, values, f), f=vector_to_json(f.coeffs),
                            **_extension_dump(p, basis, values))


@register('T3.6', 'the separation construction yields a certified extension as well')
def extension_by_separation(rng, dim):
    p, basis, values = _extension_problem(rng, dim, nonnegative=True, nonzero=True)
    f = hahn_banach_via_separation(p, basis, values)
    g = hahn_banach_extend(p, basis, values)
    return CaseResult.check(certified(p, basis, values, f) and certified(p, basis, values, g),
                            f=vector_to_json(f.coeffs), **_extension_dump(p, basis, values))


@register('L5.2', 'properly_separate succeeds iff core(S1) and core(S2) do not meet')
def proper_separation_criterion(rng, dim):
    S1, S2 = _set_pair(rng, dim)
    result = properly_separate(S1, S2)
    disjoint = is_empty(core_of(S1).intersect(core_of(S2)))
    dump = dict(first=hpolyhedron_to_json(S1), second=hpolyhedron_to_json(S2), result=separation_to_json(result))
    if isinstance(result, Inseparable) == disjoint:
        return CaseResult.violated(**dump)
    if isinstance(result, SeparationResult) and not valid_set_separation(result, S1, S2):
        return CaseResult.violated(**dump)
    return CaseResult.passed()
