# -*- coding: utf-8 -*-
"""
Independent checks that share no code path with double description, the core formula or
the normal-cone pipeline.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence

from pymodaq.utils.logger import set_logger, get_module_name

from ..arith import QVector, dot, qvector, rank, solve_linear_system, unit
from ..calculus import PolyhedralFunction, evaluate
from ..errors import BudgetExceeded, DimensionError, InfiniteValueError, RepresentationError
from ..lp import minimize
from ..polyhedra import HPolyhedron

logger = set_logger(get_module_name(__file__))


def _bruteforce_limits():
    from .. import config
    return int(config['bruteforce', 'max_dim']), int(config['bruteforce', 'max_constraints'])


def enumerate_vertices_bruteforce(P: HPolyhedron, max_dim: Optional[int] = None,
                                  max_constraints: Optional[int] = None) -> List[QVector]:
    """Vertices of a closed P by solving every dim-subset of constraints as equalities

    :raises RepresentationError: P has strict constraints
    :raises BudgetExceeded: P is larger than the configured limits
    :return: the sorted vertex list, empty when P is empty or has lineality
    """
    if not P.is_closed:
        raise RepresentationError("vertex enumeration needs a closed set")
    default_dim, default_count = _bruteforce_limits()
    max_dim = max_dim if max_dim is not None else default_dim
    max_constraints = max_constraints if max_constraints is not None else default_count
    if P.dim > max_dim or len(P.constraints) > max_constraints:
        raise BudgetExceeded("brute-force enumeration limited to dimension {} and {} constraints".format(
            max_dim, max_constraints))
    if P.is_marked_empty:
        return []
    normals = tuple(c.a for c in P.constraints)
    if rank(normals) < P.dim:
        logger.warning("set has lineality, no vertex to enumerate")
        return []
    vertices = set()
    for subset in combinations(P.constraints, P.dim):
        A = tuple(c.a for c in subset)
        if rank(A) < P.dim:
            continue
        x = solve_linear_system(A, tuple(c.b for c in subset))
        if x is not None and P.contains(x):
            vertices.add(x)
    return sorted(vertices)


def bruteforce_maximum(objective: Sequence, P: HPolyhedron) -> Optional[Fraction]:
    """max of objective over the vertices of a bounded closed P, None when P is empty"""
    vertices = enumerate_vertices_bruteforce(P)
    if not vertices:
        return None
    c = qvector(objective)
    return max(dot(c, v) for v in vertices)


def check_core_definitional(S: HPolyhedron, x: Sequence) -> bool:
    """x in S, and along each constraint normal and each axis, in both orientations, a
    positive step stays in S"""
    x = qvector(x)
    if len(x) != S.dim:
        raise DimensionError("point of dimension {} for a set of dimension {}".format(len(x), S.dim))
    if not S.contains(x):
        return False
    directions = [c.a for c in S.constraints] + [unit(S.dim, k) for k in range(S.dim)]
    for v in directions:
        for sign in (1, -1):
            for c in S.constraints:
                rate = sign * dot(c.a, v)
                if rate > 0 and c.b - dot(c.a, x) == 0:
                    # the admissible step along sign * v is zero
                    return False
    return True


def check_subgradient_definitional(phi: PolyhedralFunction, x: Sequence, f: Sequence) -> bool:
    """min over epi phi of t - f . x equals phi(x) - f . x

    :raises InfiniteValueError: phi(x) is not finite
    """
    x, f = qvector(x), qvector(f)
    value = evaluate(phi, x)
    if not isinstance(value, Fraction):
        raise InfiniteValueError("phi({}) = {}".format(x, value))
    objective = tuple(-c for c in f) + (Fraction(1),)
    result = minimize(objective, phi.epigraph.rows)
    return result.is_optimal and result.optimum == value - dot(f, x)
