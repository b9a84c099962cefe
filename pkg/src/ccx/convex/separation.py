# -*- coding: utf-8 -*-
"""
Separation of a point from a set and proper separation of two sets.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from pymodaq.utils.logger import set_logger, get_module_name

from ..arith import QVector, dot, qvector, zeros
from ..errors import DimensionError, PreconditionUnmet
from ..lp import maximize, minimize
from ..polyhedra import HPolyhedron, Openness, interior_point, remove_redundant, set_difference, strictly_feasible
from .functionals import Functional

logger = set_logger(get_module_name(__file__))


@dataclass(frozen=True)
class SeparationResult:
    """f <= level on the first set, f >= level_hi >= level on the second

    ``witness_lo`` and ``witness_hi`` make the separation proper: f(witness_lo) < f(witness_hi).
    ``strict`` records the certified stronger statement f(x) < f(x0) for every x of an open set.
    """
    functional: Functional
    level: Fraction
    witness_lo: QVector
    witness_hi: QVector
    level_hi: Optional[Fraction] = None
    strict: bool = False


@dataclass(frozen=True)
class Inseparable:
    """No proper separation exists; witness is a common point of the cores"""
    witness: QVector
    reason: str = 'cores intersect'


def separate_point(S: HPolyhedron, x0: Sequence) -> Union[SeparationResult, Inseparable]:
    """Properly separate S from the singleton {x0}

    The functional is the normal of the first irredundant constraint of the closure that x0
    does not satisfy strictly.

    :raises PreconditionUnmet: core(S) is empty
    """
    x0 = qvector(x0)
    if len(x0) != S.dim:
        raise DimensionError("point of dimension {} for a set of dimension {}".format(len(x0), S.dim))
    inner = interior_point(S)
    if inner is None:
        raise PreconditionUnmet('core(S) nonempty', "separation needs a set with nonempty core")
    if S.as_open().contains(x0):
        return Inseparable(x0, 'point in core')
    closure = remove_redundant(S.relaxed())
    con = next(c for c in closure.constraints if dot(c.a, x0) >= c.b)
    f = Functional(con.a)
    strict = False
    if S.openness is Openness.OPEN:
        strict_rows = [(c.a, c.b) for c in S.constraints]
        strict = strictly_feasible(S.dim, strict_rows, (), [(con.a, f(x0))]) is None
    logger.debug("separated {} with functional {} at level {}".format(x0, f.coeffs, con.b))
    return SeparationResult(f, con.b, inner, x0, f(x0), strict)


def properly_separate(S1: HPolyhedron, S2: HPolyhedron) -> Union[SeparationResult, Inseparable]:
    """Properly separate S1 from S2

    The functional separates 0 from the difference S1 - S2 of the closures; the levels are
    the supremum over S1 and the infimum over S2. The witnesses are the max-margin interior
    points of S1 and S2 as returned by :func:`interior_point`, not points found by walking the
    vertices and rays of either set.

    :raises PreconditionUnmet: one of the cores is empty
    """
    if S1.dim != S2.dim:
        raise DimensionError("cannot separate sets of dimensions {} and {}".format(S1.dim, S2.dim))
    inner1, inner2 = interior_point(S1), interior_point(S2)
    if inner1 is None or inner2 is None:
        raise PreconditionUnmet('core(S1), core(S2) nonempty', "proper separation needs sets with nonempty cores")
    common = strictly_feasible(S1.dim, S1.rows + S2.rows)
    if common is not None:
        return Inseparable(common)
    difference = set_difference(S1.relaxed(), S2.relaxed())
    result = separate_point(difference, zeros(S1.dim))
    if isinstance(result, Inseparable):
        # the cores of the difference and of the operands disagree, which the LP above excludes
        raise RuntimeError("difference core contains 0 while the cores are disjoint")
    f = result.functional
    level = maximize(f.coeffs, S1.rows).optimum
    level_hi = minimize(f.coeffs, S2.rows).optimum
    return SeparationResult(f, level, inner1, inner2, level_hi)
