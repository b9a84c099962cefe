# -*- coding: utf-8 -*-
"""
Set-valued maps with convex polyhedral graphs: domains, values, sums, compositions and
coderivatives.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from pymodaq.utils.logger import set_logger, get_module_name

from ..arith import neg, qvector, selector, zeros
from ..convex import NotAMember, normal_cone
from ..errors import DimensionError
from ..polyhedra import Constraint, HPolyhedron, eliminate_variables, remove_redundant

logger = set_logger(get_module_name(__file__))


@dataclass(frozen=True)
class SetValuedMap:
    """F : Q^dim_x => Q^dim_y given by its graph, coordinates ordered x then y"""
    dim_x: int
    dim_y: int
    graph: HPolyhedron

    def __post_init__(self):
        if self.graph.dim != self.dim_x + self.dim_y:
            raise DimensionError("graph of dimension {} for a map from dimension {} to dimension {}".format(
                self.graph.dim, self.dim_x, self.dim_y))

    @property
    def dim(self) -> int:
        return self.dim_x + self.dim_y


def _sum_equalities(total: int, target: Sequence[int], parts: Sequence[Sequence[int]], rhs=None):
    """Constraints target[k] - sum_parts part[k] = rhs[k], as opposite inequalities"""
    constraints = []
    for k, t in enumerate(target if target is not None else parts[0]):
        a = [Fraction(0)] * total
        if target is not None:
            a[t] = Fraction(1)
        for part in parts:
            a[part[k]] -= 1
        b = Fraction(0) if rhs is None else -rhs[k]
        constraints.append(Constraint(tuple(a), b))
        constraints.append(Constraint(neg(a), -b))
    return constraints


def domain_of(F: SetValuedMap) -> HPolyhedron:
    return eliminate_variables(F.graph, range(F.dim_x, F.dim))


def value_at(F: SetValuedMap, x: Sequence) -> HPolyhedron:
    """F(x) as a set in Q^dim_y"""
    x = qvector(x)
    if len(x) != F.dim_x:
        raise DimensionError("point of dimension {} for a map from dimension {}".format(len(x), F.dim_x))
    M = tuple(zeros(F.dim_y) for _ in range(F.dim_x)) + selector(F.dim_y, range(F.dim_y))
    return F.graph.pullback(M, x + zeros(F.dim_y))


def map_sum(F1: SetValuedMap, F2: SetValuedMap) -> SetValuedMap:
    """(F1 + F2)(x) = F1(x) + F2(x)

    Works in (x, y1, y2, y) with y = y1 + y2 and eliminates y1 and y2.
    """
    if (F1.dim_x, F1.dim_y) != (F2.dim_x, F2.dim_y):
        raise DimensionError("cannot add maps {}->{} and {}->{}".format(F1.dim_x, F1.dim_y, F2.dim_x, F2.dim_y))
    n, m = F1.dim_x, F1.dim_y
    total = n + 3 * m
    xs = list(range(n))
    y1 = list(range(n, n + m))
    y2 = list(range(n + m, n + 2 * m))
    y = list(range(n + 2 * m, total))
    system = F1.graph.pullback(selector(total, xs + y1)).intersect(
        F2.graph.pullback(selector(total, xs + y2)),
        HPolyhedron(total, tuple(_sum_equalities(total, y, [y1, y2]))))
    return SetValuedMap(n, m, eliminate_variables(system, y1 + y2))


def sum_decompositions(F1: SetValuedMap, F2: SetValuedMap, x: Sequence, y: Sequence) -> HPolyhedron:
    """Pairs (y1, y2) with y1 in F1(x), y2 in F2(x) and y1 + y2 = y"""
    y = qvector(y)
    m = F1.dim_y
    if len(y) != m or F2.dim_y != m:
        raise DimensionError("decomposition of a point of dimension {} into maps to dimension {}".format(len(y), m))
    total = 2 * m
    first, second = list(range(m)), list(range(m, total))
    return value_at(F1, x).embed(total, 0).intersect(
        value_at(F2, x).embed(total, m),
        HPolyhedron(total, tuple(_sum_equalities(total, None, [first, second], rhs=y))))


def map_compose(G: SetValuedMap, F: SetValuedMap) -> SetValuedMap:
    """(G o F)(x) = union of G(y) over y in F(x)"""
    if F.dim_y != G.dim_x:
        raise DimensionError("cannot compose G from dimension {} after F into dimension {}".format(G.dim_x, F.dim_y))
    n, m, k = F.dim_x, F.dim_y, G.dim_y
    total = n + m + k
    system = F.graph.pullback(selector(total, range(n + m))).intersect(
        G.graph.pullback(selector(total, range(n, total))))
    return SetValuedMap(n, k, eliminate_variables(system, range(n, n + m)))


def coderivative(F: SetValuedMap, x: Sequence, y: Sequence, g: Sequence) -> Union[HPolyhedron, NotAMember]:
    """D*F(x, y)(g) = {f : (f, -g) in N((x, y); gph F)}

    :return: a closed set of functionals on Q^dim_x, or NotAMember when (x, y) is outside
        the closure of the graph
    """
    x, y, g = qvector(x), qvector(y), qvector(g)
    if len(g) != F.dim_y:
        raise DimensionError("functional of dimension {} on a space of dimension {}".format(len(g), F.dim_y))
    cone = normal_cone(F.graph, x + y)
    if isinstance(cone, NotAMember):
        return cone
    M = selector(F.dim_x, range(F.dim_x)) + tuple(zeros(F.dim_x) for _ in range(F.dim_y))
    return remove_redundant(cone.to_hpolyhedron().pullback(M, zeros(F.dim_x) + neg(g)))


def coderivative_composition(F: SetValuedMap, G: SetValuedMap, x: Sequence, y: Sequence, z: Sequence,
                             h: Sequence) -> Union[HPolyhedron, NotAMember]:
    """D*F(x, y) o D*G(y, z)(h), i.e. {f : (f, -g) in N(gph F), (g, -h) in N(gph G) for some g}"""
    x, y, z, h = qvector(x), qvector(y), qvector(z), qvector(h)
    n, m, k = F.dim_x, F.dim_y, G.dim_y
    cone_f = normal_cone(F.graph, x + y)
    cone_g = normal_cone(G.graph, y + z)
    for cone in (cone_f, cone_g):
        if isinstance(cone, NotAMember):
            return cone
    total = n + m
    # cone_f lives in (f, w) with w = -g, cone_g in (u, v) with u = g and v = -h
    on_f = cone_f.to_hpolyhedron().pullback(selector(total, range(total), [1] * n + [-1] * m))
    M = selector(total, range(n, total)) + tuple(zeros(total) for _ in range(k))
    on_g = cone_g.to_hpolyhedron().pullback(M, zeros(m) + neg(h))
    return eliminate_variables(on_f.intersect(on_g), range(n, total))
