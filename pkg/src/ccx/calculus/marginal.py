# -*- coding: utf-8 -*-
"""
Optimal value functions mu(x) = inf{phi(x, y) : y in F(x)}, their argmin sets and the
subdifferential formula through coderivatives.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from pymodaq.utils.logger import set_logger, get_module_name

from ..arith import neg, qvector, selector, unit, zeros
from ..convex import NotAMember, normal_cone
from ..errors import DimensionError, ImproperFunctionError, InfiniteValueError, NotOptimalError, PreconditionUnmet
from ..lp import find_point, minimize
from ..polyhedra import HPolyhedron, eliminate_variables, is_empty, remove_redundant, strictly_feasible
from .functions import PolyhedralFunction, subdifferential
from .setvalued import SetValuedMap

logger = set_logger(get_module_name(__file__))


def _joint_system(phi: PolyhedralFunction, F: SetValuedMap) -> HPolyhedron:
    """(epi phi) n (gph F x Q) in coordinates (x, y, t)"""
    if phi.dim != F.dim:
        raise DimensionError("function on dimension {} with a map {}->{}".format(phi.dim, F.dim_x, F.dim_y))
    return phi.epigraph.intersect(F.graph.embed(phi.dim + 1, 0))


def marginal_function(phi: PolyhedralFunction, F: SetValuedMap) -> PolyhedralFunction:
    """mu(x) = inf{phi(x, y) : y in F(x)}, by projecting the joint system onto (x, t)

    :raises ImproperFunctionError: mu takes the value -inf, detected by checking whether
        some direction (0, d, -1) recedes in the joint system
    """
    joint = _joint_system(phi, F)
    n, m = F.dim_x, F.dim_y
    if not is_empty(joint):
        recession = [(c.a[n:n + m], c.a[-1]) for c in joint.constraints]
        direction = find_point(m, recession)
        if direction is not None:
            raise ImproperFunctionError("mu is unbounded below along y-direction {}".format(direction))
    epi = eliminate_variables(joint, range(n, n + m))
    return PolyhedralFunction(n, epi)


def marginal_value(phi: PolyhedralFunction, F: SetValuedMap, x: Sequence) -> Fraction:
    """mu(x) by one LP over (y, t)

    :raises InfiniteValueError: mu(x) is not finite
    """
    x = qvector(x)
    if len(x) != F.dim_x:
        raise DimensionError("point of dimension {} for a map from dimension {}".format(len(x), F.dim_x))
    m = F.dim_y
    joint = _joint_system(phi, F)
    M = tuple(zeros(m + 1) for _ in range(F.dim_x)) + selector(m + 1, range(m + 1))
    slice_ = joint.pullback(M, x + zeros(m + 1))
    result = minimize(unit(m + 1, m), slice_.rows)
    if not result.is_optimal:
        raise InfiniteValueError("mu({}) is {}".format(x, result.status.value))
    return result.optimum


def argmin_set(phi: PolyhedralFunction, F: SetValuedMap, x: Sequence) -> HPolyhedron:
    """{y in F(x) : phi(x, y) <= mu(x)}"""
    x = qvector(x)
    mu = marginal_value(phi, F, x)
    m = F.dim_y
    M = tuple(zeros(m) for _ in range(F.dim_x)) + selector(m, range(m)) + (zeros(m),)
    return remove_redundant(_joint_system(phi, F).pullback(M, x + zeros(m) + (mu,)))


def qualification_point(phi: PolyhedralFunction, F: SetValuedMap):
    """A point of core(dom phi) n core(gph F), or None"""
    dom = phi.domain()
    return strictly_feasible(F.dim, dom.rows + F.graph.rows)


def marginal_subdifferential(phi: PolyhedralFunction, F: SetValuedMap, x: Sequence, y: Sequence,
                             check_qualification: bool = True) -> HPolyhedron:
    """Union over (f, g) in subdiff phi(x, y) of f + D*F(x, y)(g), as one projection

    Works in (h, f, g) with h = f + f2, (f, g) in the subdifferential of phi and
    (f2, -g) in the normal cone of the graph; f and g are eliminated. Without the
    qualification condition the result is still contained in subdiff mu(x), and
    ``check_qualification=False`` returns it in that case.

    :raises NotOptimalError: y is not a minimizer of phi(x, .) over F(x)
    :raises PreconditionUnmet: core(dom phi) and core(gph F) do not meet, unless
        check_qualification is False
    """
    x, y = qvector(x), qvector(y)
    n, m = F.dim_x, F.dim_y
    if not argmin_set(phi, F, x).contains(y):
        raise NotOptimalError("{} does not minimize phi({}, .) over F({})".format(y, x, x))
    if check_qualification and qualification_point(phi, F) is None:
        raise PreconditionUnmet('core(dom phi) & core(gph F)')
    sub_phi = subdifferential(phi, x + y).set
    cone = normal_cone(F.graph, x + y)
    if isinstance(cone, NotAMember):
        raise NotOptimalError("({}, {}) is outside the graph".format(x, y))
    total = 2 * n + m
    h, f, g = list(range(n)), list(range(n, 2 * n)), list(range(2 * n, total))
    on_phi = sub_phi.pullback(selector(total, f + g))
    rows = [tuple(a - b for a, b in zip(unit(total, h[i]), unit(total, f[i]))) for i in range(n)]
    rows += [neg(unit(total, g[j])) for j in range(m)]
    on_graph = cone.to_hpolyhedron().pullback(tuple(rows))
    result = eliminate_variables(on_phi.intersect(on_graph), f + g)
    logger.debug("marginal subdifferential at {}: {} constraints".format(x, len(result.constraints)))
    return result
