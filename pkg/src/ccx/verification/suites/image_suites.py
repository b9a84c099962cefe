# -*- coding: utf-8 -*-
"""
Cores of linear images and of graphs.
"""
from ...arith import matvec
from ...calculus import domain_of, value_at
from ...convex import core_of
from ...oracle import random_int, random_map, random_matrix, random_set
from ...polyhedra import affine_image, interior_point, same_set, sample_points, v_to_h
from ...serialization import hpolyhedron_to_json, map_to_json, vector_to_json
from ..runner import CaseResult, register
from ..sampling import LAMBDAS, blend, pick, candidate_points, spec_for


@register('L4.1', 'A surjective: A core(S) = core(A S)')
def surjective_image(rng, dim):
    spec = spec_for(dim)
    S = random_set(rng, spec)
    m = random_int(rng, 1, dim)
    A = random_matrix(rng, m, dim, spec.coef_bound, full_rank=True)
    S_open = core_of(S)
    lhs = v_to_h(affine_image(S_open, A)).as_open()
    rhs = core_of(v_to_h(affine_image(S, A)))
    dump = dict(set=hpolyhedron_to_json(S), matrix=[vector_to_json(row) for row in A])
    if not same_set(lhs, rhs):
        return CaseResult.violated(**dump)
    inner = interior_point(S)
    for b in pick(rng, sample_points(S), 3):
        for lam in LAMBDAS:
            y = matvec(A, blend(lam, inner, b))
            if not rhs.contains(y):
                return CaseResult.violated(image_point=vector_to_json(y), **dump)
    return CaseResult.passed()


@register('T4.2', '(x, y) in core(gph F) iff x in core(dom F) and y in core(F(x))', max_dim=3)
def graph_core(rng, dim):
    F = random_map(rng, spec_for(dim))
    graph_core_set = core_of(F.graph)
    domain_core = core_of(domain_of(F))
    for point in candidate_points(rng, F.graph, count=4, outside=3):
        x, y = point[:F.dim_x], point[F.dim_x:]
        expected = domain_core.contains(x) and core_of(value_at(F, x)).contains(y)
        if graph_core_set.contains(point) != expected:
            return CaseResult.violated(map=map_to_json(F), point=vector_to_json(point))
    return CaseResult.passed()
