# -*- coding: utf-8 -*-
"""
Sum rules, chain rules and the marginal-function formula.

Each case first draws a companion instance cut by a hyperplane through its center so that
the qualification condition fails; only the inclusion that holds without qualification is
checked there. The qualified instance is then generated around shared centers, its
qualification checked by a strict-feasibility LP, and the full equality verified.
"""
from ...arith import neg, selector, solve_linear_system, unit, zeros
from ...calculus import (SetValuedMap, adjoint_image, argmin_set, coderivative, coderivative_composition,
                         func_sum, map_compose, map_sum, marginal_function, marginal_subdifferential,
                         precompose_linear, qualification_point, subdifferential, sum_decompositions, value_at)
from ...convex import NotAMember
from ...oracle import (flatten_through, halfspace, random_center, random_function, random_matrix, random_set,
                       random_vector, split_through)
from ...polyhedra import h_to_v, interior_point, same_set, sample_points, set_includes, set_sum, strictly_feasible
from ...serialization import function_to_json, map_to_json, vector_to_json
from ..runner import CaseResult, register, with_unqualified_companion
from ..sampling import pick, spec_for


def _map_around(rng, dim_x, dim_y, center):
    return SetValuedMap(dim_x, dim_y, random_set(rng, spec_for(dim_x + dim_y), center=center))


def _settle(qualified, condition, checked):
    return CaseResult.passed(checked) if qualified else CaseResult.unmet(condition, checked)


def _coderivative_sum_case(rng, dim, qualify):
    bound = spec_for(dim).coef_bound
    c = random_center(rng, dim, bound)
    c1, c2 = c + random_center(rng, 1, bound), c + random_center(rng, 1, bound)
    F1, F2 = _map_around(rng, dim, 1, c1), _map_around(rng, dim, 1, c2)
    if not qualify:
        first, second = split_through(rng, F1.graph, F2.graph, c1, bound, support=range(dim))
        F1, F2 = SetValuedMap(dim, 1, first), SetValuedMap(dim, 1, second)
    total = dim + 2
    lifted = [F1.graph.pullback(selector(total, list(range(dim)) + [dim])),
              F2.graph.pullback(selector(total, list(range(dim)) + [dim + 1]))]
    qualified = strictly_feasible(total, lifted[0].rows + lifted[1].rows) is not None
    F = map_sum(F1, F2)
    dump = dict(first=map_to_json(F1), second=map_to_json(F2))
    g = random_vector(rng, 1, bound, nonzero=True)
    checked = 0
    for point in pick(rng, sample_points(F.graph), 2):
        x, y = point[:dim], point[dim:]
        decompositions = h_to_v(sum_decompositions(F1, F2, x, y)).vertices
        if not decompositions:
            return CaseResult.violated(point=vector_to_json(point), reason='no decomposition', **dump)
        for h in (g, neg(g)):
            lhs = coderivative(F, x, y, h)
            for pair in pick(rng, decompositions, 3):
                parts = [coderivative(F1, x, pair[:1], h), coderivative(F2, x, pair[1:], h)]
                if isinstance(lhs, NotAMember) or any(isinstance(p, NotAMember) for p in parts):
                    return CaseResult.violated(point=vector_to_json(point), reason='not a member', **dump)
                rhs = set_sum(*parts)
                if not set_includes(lhs, rhs):
                    return CaseResult.violated(point=vector_to_json(point), decomposition=vector_to_json(pair),
                                               g=vector_to_json(h), reason='sum not included', **dump)
                checked += 1
                if qualified and not same_set(lhs, rhs):
                    return CaseResult.violated(point=vector_to_json(point), decomposition=vector_to_json(pair),
                                               g=vector_to_json(h), **dump)
    return _settle(qualified, 'graphical core qualification', checked)


@register('T6.1', 'D*(F1 + F2)(x, y)(g) = D*F1(x, y1)(g) + D*F2(x, y2)(g)', max_dim=3)
def coderivative_sum_rule(rng, dim):
    return with_unqualified_companion(_coderivative_sum_case, rng, dim)


def _subdifferential_sum_case(rng, dim, qualify):
    spec = spec_for(dim)
    c = random_center(rng, dim, spec.coef_bound)
    domains = [random_set(rng, spec, center=c) for _ in range(2)]
    if not qualify:
        domains = list(split_through(rng, domains[0], domains[1], c, spec.coef_bound))
    phi1, phi2 = [random_function(rng, spec, domain=domain) for domain in domains]
    qualified = strictly_feasible(dim + 1, phi1.epigraph.rows + phi2.epigraph.rows) is not None
    total = func_sum(phi1, phi2)
    dump = dict(first=function_to_json(phi1), second=function_to_json(phi2))
    checked = 0
    for x in pick(rng, sample_points(domains[0].intersect(domains[1])), 3) + [c]:
        lhs = subdifferential(total, x).set
        rhs = set_sum(subdifferential(phi1, x).set, subdifferential(phi2, x).set)
        if not set_includes(lhs, rhs):
            return CaseResult.violated(point=vector_to_json(x), reason='sum not included', **dump)
        checked += 1
        if qualified and not same_set(lhs, rhs):
            return CaseResult.violated(point=vector_to_json(x), **dump)
    return _settle(qualified, 'epigraphical core qualification', checked)


@register('T6.2', 'subdiff(phi1 + phi2)(x) = subdiff phi1(x) + subdiff phi2(x)')
def subdifferential_sum_rule(rng, dim):
    return with_unqualified_companion(_subdifferential_sum_case, rng, dim)


def _coderivative_chain_case(rng, dim, qualify):
    bound = spec_for(dim).coef_bound
    c, d, e = random_center(rng, dim, bound), random_center(rng, 1, bound), random_center(rng, 1, bound)
    F = _map_around(rng, dim, 1, c + d)
    G = _map_around(rng, 1, 1, d + e)
    if not qualify:
        # F only reaches y <= d and G only starts from y >= d
        F = SetValuedMap(dim, 1, F.graph.intersect(halfspace(unit(dim + 1, dim), d[0])))
        G = SetValuedMap(1, 1, G.graph.intersect(halfspace(neg(unit(2, 0)), -d[0])))
    total = dim + 2
    lifted = [F.graph.pullback(selector(total, range(dim + 1))), G.graph.pullback(selector(total, range(dim, total)))]
    qualified = strictly_feasible(total, lifted[0].rows + lifted[1].rows) is not None
    H = map_compose(G, F)
    dump = dict(inner=map_to_json(F), outer=map_to_json(G))
    h = random_vector(rng, 1, bound, nonzero=True)
    preimage = selector(1, [0]) + (zeros(1),)
    checked = 0
    for point in pick(rng, sample_points(H.graph), 2):
        x, z = point[:dim], point[dim:]
        middle = value_at(F, x).intersect(G.graph.pullback(preimage, zeros(1) + z))
        ys = h_to_v(middle).vertices
        if not ys:
            return CaseResult.violated(point=vector_to_json(point), reason='empty M(x, z)', **dump)
        for k in (h, neg(h)):
            lhs = coderivative(H, x, z, k)
            for y in pick(rng, ys, 2):
                rhs = coderivative_composition(F, G, x, y, z, k)
                if isinstance(lhs, NotAMember) or isinstance(rhs, NotAMember) or not set_includes(lhs, rhs):
                    return CaseResult.violated(point=vector_to_json(point), y=vector_to_json(y),
                                               h=vector_to_json(k), reason='composition not included', **dump)
                checked += 1
                if qualified and not same_set(lhs, rhs):
                    return CaseResult.violated(point=vector_to_json(point), y=vector_to_json(y),
                                               h=vector_to_json(k), **dump)
    return _settle(qualified, 'core(gph F x Q) n core(Q^n x gph G)', checked)


@register('T7.1', 'D*(G o F)(x, z)(h) = D*F(x, y) o D*G(y, z)(h) for y in M(x, z)', max_dim=3)
def coderivative_chain_rule(rng, dim):
    return with_unqualified_companion(_coderivative_chain_case, rng, dim)


def _subdifferential_chain_case(rng, dim, qualify):
    m, n = max(1, dim - 1), dim
    spec = spec_for(m)
    c = random_center(rng, m, spec.coef_bound)
    domain = random_set(rng, spec, center=c)
    if not qualify:
        domain = flatten_through(rng, domain, c, spec.coef_bound)
    phi = random_function(rng, spec, domain=domain)
    A = random_matrix(rng, m, n, spec.coef_bound, full_rank=True)
    qualified = interior_point(domain.pullback(A)) is not None
    psi = precompose_linear(phi, A)
    dump = dict(function=function_to_json(phi), matrix=[vector_to_json(row) for row in A])
    checked = 0
    for y in pick(rng, sample_points(domain), 3) + [c]:
        x = solve_linear_system(A, y)
        if x is None:
            return CaseResult.violated(y=vector_to_json(y), reason='A is not surjective', **dump)
        lhs = subdifferential(psi, x).set
        rhs = adjoint_image(A, subdifferential(phi, y).set)
        if not set_includes(lhs, rhs):
            return CaseResult.violated(point=vector_to_json(x), reason='adjoint image not included', **dump)
        checked += 1
        if qualified and not same_set(lhs, rhs):
            return CaseResult.violated(point=vector_to_json(x), **dump)
    return _settle(qualified, 'range(A) n core(dom phi) nonempty', checked)


@register('T7.2', 'subdiff(phi o A)(x) = A* subdiff phi(A x) for surjective A')
def subdifferential_chain_rule(rng, dim):
    return with_unqualified_companion(_subdifferential_chain_case, rng, dim)


def _marginal_case(rng, dim, qualify):
    n = max(1, dim - 1)
    spec = spec_for(n + 1)
    center = random_center(rng, n, spec.coef_bound) + random_center(rng, 1, spec.coef_bound)
    graph = random_set(rng, spec, center=center)
    domain = random_set(rng, spec, center=center)
    if not qualify:
        graph, domain = split_through(rng, graph, domain, center, spec.coef_bound, support=range(n))
    F = SetValuedMap(n, 1, graph)
    phi = random_function(rng, spec, domain=domain)
    qualified = qualification_point(phi, F) is not None
    mu = marginal_function(phi, F)
    dump = dict(function=function_to_json(phi), map=map_to_json(F))
    checked = 0
    for x in pick(rng, sample_points(mu.domain()), 2) + [center[:n]]:
        direct = subdifferential(mu, x).set
        minimizers = h_to_v(argmin_set(phi, F, x)).vertices
        if not minimizers:
            return CaseResult.violated(point=vector_to_json(x), reason='empty argmin', **dump)
        for y in pick(rng, minimizers, 2):
            by_formula = marginal_subdifferential(phi, F, x, y, check_qualification=False)
            if not set_includes(direct, by_formula):
                return CaseResult.violated(point=vector_to_json(x), y=vector_to_json(y),
                                           reason='formula not included', **dump)
            checked += 1
            if qualified and not same_set(by_formula, direct):
                return CaseResult.violated(point=vector_to_json(x), y=vector_to_json(y), **dump)
    return _settle(qualified, 'core(dom phi) n core(gph F)', checked)


@register('T8.1', 'subdiff mu(x) = union of f + D*F(x, y)(g) over (f, g) in subdiff phi(x, y)', max_dim=3)
def marginal_rule(rng, dim):
    return with_unqualified_companion(_marginal_case, rng, dim)
