# -*- coding: utf-8 -*-
"""
Algebraic core, algebraic closure and Minkowski gauge of polyhedral sets.

In Q^n the algebraic core of a convex polyhedron is empty as soon as the set has an
implicit equality, and otherwise it is the set with every constraint made strict. The
algebraic closure of a nonempty convex polyhedron is its relaxation.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from pymodaq.utils.logger import set_logger, get_module_name

from ..arith import qvector, zeros
from ..errors import DimensionError, PreconditionUnmet
from ..lp import maximize, minimize
from ..polyhedra import HPolyhedron, Openness, implicit_equalities, is_empty, max_margin
from .functionals import Functional, SublinearFunc

logger = set_logger(get_module_name(__file__))


def core_of(S: HPolyhedron) -> HPolyhedron:
    """Algebraic core of S

    :param S: any constraint-form set
    :type S: HPolyhedron
    :return: the open set with every constraint strict, or the empty set
    :rtype: HPolyhedron
    """
    margin, _ = max_margin(S)
    if margin is None:
        return HPolyhedron.empty(S.dim)
    if margin <= 0:
        equalities = implicit_equalities(S)
        logger.debug("core is empty, implicit equalities on constraints {}".format(equalities))
        return HPolyhedron.empty(S.dim)
    return S.as_open()


def lin_of(S: HPolyhedron) -> HPolyhedron:
    """Algebraic closure of S, i.e. S with every strict constraint relaxed

    The empty set is returned as is, with a warning.
    """
    if is_empty(S):
        logger.warning("algebraic closure requested for an empty set")
        return HPolyhedron.empty(S.dim)
    return S.relaxed()


def is_absorbing(S: HPolyhedron) -> bool:
    return core_of(S).contains(zeros(S.dim))


def gauge_eval(S: HPolyhedron, x: Sequence) -> Fraction:
    """Minkowski gauge inf{l > 0 : x in l S} of an absorbing S

    :raises PreconditionUnmet: S is not absorbing
    """
    x = qvector(x)
    if len(x) != S.dim:
        raise DimensionError("point of dimension {} for a set of dimension {}".format(len(x), S.dim))
    if not is_absorbing(S):
        raise PreconditionUnmet('absorbing(S)', "the gauge needs an absorbing set")
    value = Fraction(0)
    for con in S.constraints:
        value = max(value, sum((a * v for a, v in zip(con.a, x)), Fraction(0)) / con.b)
    return value


def sublevel_open(p: SublinearFunc) -> HPolyhedron:
    """{x : p(x) < 1}"""
    return HPolyhedron.from_rows(p.dim, [(piece.coeffs, 1) for piece in p.pieces], Openness.OPEN)


def is_nonconstant_on(f: Functional, S: HPolyhedron) -> bool:
    """Whether f takes two different values on the closure of S (unbounded sides count)"""
    if is_empty(S):
        return False
    high = maximize(f.coeffs, S.rows)
    low = minimize(f.coeffs, S.rows)
    if not (high.is_optimal and low.is_optimal):
        return True
    return high.optimum > low.optimum
