# -*- coding: utf-8 -*-
"""
Suites on the core and the algebraic closure of a single set.
"""
from fractions import Fraction

from ...arith import dot, neg
from ...convex import Functional, core_of, is_nonconstant_on, lin_of
from ...oracle import random_int, random_set, random_vector
from ...polyhedra import Constraint, HPolyhedron, interior_point, product, same_set, sample_points, set_sum
from ...serialization import hpolyhedron_to_json, vector_to_json
from ..runner import CaseResult, register
from ..sampling import LAMBDAS, blend, pick, candidate_points, spec_for


def _core_points(rng, S, count=3):
    """The max-margin point of S and blends of it with closure samples"""
    inner = interior_point(S)
    points = [inner]
    for b in pick(rng, sample_points(S), count):
        points.append(blend(LAMBDAS[random_int(rng, 0, 2)], inner, b))
    return points


@register('P2.1', 'core_of(S) and lin_of(S) are convex')
def convexity(rng, dim):
    S = random_set(rng, spec_for(dim))
    core, closure = core_of(S), lin_of(S)
    for members, target in ((_core_points(rng, S), core), (pick(rng, sample_points(S), 4), closure)):
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                for lam in LAMBDAS:
                    w = blend(lam, u, v)
                    if not target.contains(w):
                        return CaseResult.violated(set=hpolyhedron_to_json(S), u=vector_to_json(u),
                                                   v=vector_to_json(v), point=vector_to_json(w))
    return CaseResult.passed()


@register('P2.2', 'a in core(S), b in S: [a, b) lies in core(S)')
def segment_property(rng, dim):
    S = random_set(rng, spec_for(dim))
    core = core_of(S)
    for a in _core_points(rng, S):
        for b in pick(rng, sample_points(S), 4):
            for lam in LAMBDAS:
                if not core.contains(blend(lam, a, b)):
                    return CaseResult.violated(set=hpolyhedron_to_json(S), a=vector_to_json(a),
                                               b=vector_to_json(b), lam=str(lam))
    return CaseResult.passed()


def one_sided_absorbing(S: HPolyhedron, x) -> bool:
    """x in S and, along each +-a_i, some positive step stays in S"""
    if not S.contains(x):
        return False
    for con in S.constraints:
        for v in (con.a, neg(con.a)):
            for other in S.constraints:
                if other.slack(x) == 0 and dot(other.a, v) > 0:
                    return False
    return True


@register('P2.3', 'x in core(S) iff one-sided steps along every +-a_i stay in S')
def one_sided_criterion(rng, dim):
    S = random_set(rng, spec_for(dim))
    core = core_of(S)
    for x in candidate_points(rng, S):
        if core.contains(x) != one_sided_absorbing(S, x):
            return CaseResult.violated(set=hpolyhedron_to_json(S), point=vector_to_json(x))
    return CaseResult.passed()


@register('P2.4', 'core(core(S)) = core(S)')
def idempotence(rng, dim):
    S = random_set(rng, spec_for(dim))
    once = core_of(S)
    twice = core_of(once)
    return CaseResult.check(same_set(once, twice), set=hpolyhedron_to_json(S))


@register('P2.5', 'S open, T a polytope: core(S + T) = S + T')
def open_shift(rng, dim):
    spec = spec_for(dim)
    S = core_of(random_set(rng, spec))
    T = random_set(rng, spec)
    total = set_sum(S, T)
    return CaseResult.check(same_set(core_of(total), total),
                            open_set=hpolyhedron_to_json(S), polytope=hpolyhedron_to_json(T))


@register('P2.6', 'a nonzero functional is not constant on a set with nonempty core')
def nonconstancy(rng, dim):
    spec = spec_for(dim, bounded=random_int(rng, 0, 1) == 0)
    S = random_set(rng, spec)
    f = Functional(random_vector(rng, dim, spec.coef_bound, nonzero=True))
    return CaseResult.check(is_nonconstant_on(f, S), set=hpolyhedron_to_json(S), f=vector_to_json(f.coeffs))


def _flatten(S: HPolyhedron) -> HPolyhedron:
    """S cut by the hyperplane x_0 = c_0 through its max-margin point c"""
    c = interior_point(S)
    e = tuple(Fraction(1 if k == 0 else 0) for k in range(S.dim))
    return S.intersect(HPolyhedron(S.dim, (Constraint(e, c[0]), Constraint(neg(e), -c[0]))))


@register('E2.3', 'core(S1 x S2) = core(S1) x core(S2)')
def product_rule(rng, dim):
    first = max(1, dim - 1)
    second = max(dim, 2) - first
    S1 = random_set(rng, spec_for(first))
    S2 = random_set(rng, spec_for(second))
    if random_int(rng, 0, 2) == 0:
        S2 = _flatten(S2)
    lhs = core_of(product(S1, S2))
    rhs = product(core_of(S1), core_of(S2))
    return CaseResult.check(same_set(lhs, rhs), first=hpolyhedron_to_json(S1), second=hpolyhedron_to_json(S2))
