# -*- coding: utf-8 -*-
"""
Normal cone of an intersection against the sum of the normal cones.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from ..arith import QVector, qvector
from ..convex import NotAMember, normal_cone
from ..errors import DimensionError
from ..polyhedra import Cone, HPolyhedron, strictly_feasible


@dataclass(frozen=True)
class IntersectionRule:
    """Both sides of N(x; n S_i) = sum N(x; S_i) at one point"""
    lhs: Cone
    rhs: Cone
    qualified: bool

    @property
    def holds(self) -> bool:
        return self.lhs.same_cone(self.rhs)

    @property
    def sum_included(self) -> bool:
        """sum N(x; S_i) is always contained in N(x; n S_i)"""
        return all(self.lhs.contains(g) for g in self.rhs.generators)


def shared_core_point(sets: Sequence[HPolyhedron]) -> Optional[QVector]:
    """A point in the core of every set, or None"""
    dim = sets[0].dim
    return strictly_feasible(dim, [row for S in sets for row in S.rows])


def normal_cone_sum(sets: Sequence[HPolyhedron], x: Sequence) -> Union[Cone, NotAMember]:
    x = qvector(x)
    total = Cone(len(x))
    for S in sets:
        cone = normal_cone(S, x)
        if isinstance(cone, NotAMember):
            return cone
        total = total + cone
    return total


def intersection_rule(sets: Sequence[HPolyhedron], x: Sequence) -> Union[IntersectionRule, NotAMember]:
    if not sets:
        raise ValueError("the intersection rule needs at least one set")
    if len({S.dim for S in sets}) > 1:
        raise DimensionError("sets of different dimensions")
    x = qvector(x)
    lhs = normal_cone(sets[0].intersect(*sets[1:]), x)
    if isinstance(lhs, NotAMember):
        return lhs
    rhs = normal_cone_sum(sets, x)
    if isinstance(rhs, NotAMember):
        return rhs
    return IntersectionRule(lhs, rhs, shared_core_point(sets) is not None)
