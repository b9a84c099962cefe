# -*- coding: utf-8 -*-
"""
Differences of cores, epigraph cores and the normal cone of an intersection.
"""
from fractions import Fraction

from ...calculus import PolyhedralFunction, evaluate, intersection_rule
from ...convex import NotAMember, core_of
from ...oracle import InstanceKind, random_int, random_rational, random_set, random_sets_shared_core, random_vector
from ...polyhedra import same_set, sample_points, set_difference
from ...serialization import function_to_json, hpolyhedron_to_json, vector_to_json
from ..runner import CaseResult, register, with_unqualified_companion
from ..sampling import pick, candidate_points, spec_for


@register('L5.1', 'core(S1 - S2) = core(S1) - core(S2)')
def difference_rule(rng, dim):
    spec = spec_for(dim)
    S1, S2 = random_set(rng, spec), random_set(rng, spec)
    lhs = core_of(set_difference(S1, S2))
    rhs = set_difference(core_of(S1), core_of(S2))
    return CaseResult.check(same_set(lhs, rhs), first=hpolyhedron_to_json(S1), second=hpolyhedron_to_json(S2))


@register('L5.3', '(x, l) in core(epi psi) iff x in core(dom psi) and l > psi(x)', max_dim=3)
def epigraph_core(rng, dim):
    spec = spec_for(dim)
    omega = random_set(rng, spec)
    psi = PolyhedralFunction.max_affine([(random_vector(rng, dim, spec.coef_bound),
                                          random_rational(rng, spec.coef_bound))], omega)
    epi_core = core_of(psi.epigraph)
    omega_core = core_of(omega)
    for x in candidate_points(rng, omega):
        value = evaluate(psi, x)
        finite = isinstance(value, Fraction)
        levels = (value - 1, value, value + Fraction(1, 2)) if finite else (Fraction(0), Fraction(1))
        for level in levels:
            expected = finite and omega_core.contains(x) and level > value
            if epi_core.contains(x + (level,)) != expected:
                return CaseResult.violated(function=function_to_json(psi), point=vector_to_json(x + (level,)))
    return CaseResult.passed()


def _intersection_case(rng, dim, qualify):
    spec = spec_for(dim, InstanceKind.MULTI_SET_SHARED_CORE, set_count=random_int(rng, 2, 3), qualified=qualify)
    center, sets = random_sets_shared_core(rng, spec)
    common = sets[0].intersect(*sets[1:])
    dump = dict(sets=[hpolyhedron_to_json(S) for S in sets], center=vector_to_json(center))
    qualified = True
    checked = 0
    for x in pick(rng, sample_points(common), 4) + [center]:
        rule = intersection_rule(sets, x)
        if isinstance(rule, NotAMember):
            return CaseResult.violated(point=vector_to_json(x), reason='sample outside the intersection', **dump)
        if not rule.sum_included:
            return CaseResult.violated(point=vector_to_json(x), reason='sum not included', **dump)
        checked += 1
        qualified = qualified and rule.qualified
        if qualified and not rule.holds:
            return CaseResult.violated(point=vector_to_json(x), **dump)
    if not qualified:
        return CaseResult.unmet('core(S_1) n ... n core(S_m) nonempty', checked)
    return CaseResult.passed(checked)


@register('T5.4', 'N(x; S_1 n ... n S_m) = N(x; S_1) + ... + N(x; S_m) when the cores meet')
def intersection(rng, dim):
    return with_unqualified_companion(_intersection_case, rng, dim)
