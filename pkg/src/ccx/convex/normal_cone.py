# -*- coding: utf-8 -*-
"""
Normal cones N(x; S) = {f : f . (u - x) <= 0 for all u in S}.

Linear functionals are continuous on Q^n, so the cone of S equals the cone of its closure
and is generated by the active irredundant constraint normals of the closure.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from pymodaq.utils.logger import set_logger, get_module_name

from ..arith import QVector, dot, qvector
from ..errors import DimensionError
from ..lp import maximize
from ..polyhedra import Cone, HPolyhedron, remove_redundant

logger = set_logger(get_module_name(__file__))


@dataclass(frozen=True)
class NotAMember:
    """The point is outside the set, where the normal cone is taken to be empty"""
    dim: int
    point: QVector


def normal_cone(S: HPolyhedron, x: Sequence) -> Union[Cone, NotAMember]:
    """Normal cone of S at x

    :param S: the set
    :type S: HPolyhedron
    :param x: base point, member of the closure of S
    :return: the cone, or NotAMember when x is outside the closure
    """
    x = qvector(x)
    if len(x) != S.dim:
        raise DimensionError("point of dimension {} for a set of dimension {}".format(len(x), S.dim))
    closure = S.relaxed()
    if not closure.contains(x):
        logger.debug("normal cone requested at {} outside the set".format(x))
        return NotAMember(S.dim, x)
    if not S.contains(x):
        logger.debug("base point on the relaxed boundary, cone computed on the closure")
    irredundant = remove_redundant(closure)
    active = [c.a for c in irredundant.constraints if dot(c.a, x) == c.b]
    return Cone(S.dim, tuple(active))


def is_normal(S: HPolyhedron, x: Sequence, f: Sequence) -> bool:
    """Definitional test: max over S of f equals f(x)"""
    x, f = qvector(x), qvector(f)
    result = maximize(f, S.rows)
    return result.is_optimal and result.optimum == dot(f, x)
