# -*- coding: utf-8 -*-
"""
LP-backed queries on constraint-form sets: emptiness, interior points, support values and
redundancy removal. Strict constraints are handled through a margin variable t: the strict
rows become a . x + t <= b and the system is strictly feasible iff the optimal t is positive.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from pymodaq.utils.logger import set_logger, get_module_name

from ..arith import QVector, unit, zeros
from ..lp import LPResult, maximize, minimize
from .sets import Constraint, HPolyhedron

logger = set_logger(get_module_name(__file__))


def _margin_lp(dim: int, strict_rows, closed_rows, equalities=()) -> LPResult:
    """maximize t s.t. strict rows with margin t, closed rows as they are, t <= 1"""
    inequalities = [(tuple(a) + (Fraction(1),), b) for a, b in strict_rows]
    inequalities += [(tuple(a) + (Fraction(0),), b) for a, b in closed_rows]
    inequalities.append((zeros(dim) + (Fraction(1),), Fraction(1)))
    eqs = [(tuple(a) + (Fraction(0),), b) for a, b in equalities]
    return maximize(unit(dim + 1, dim), inequalities, eqs)


def strictly_feasible(dim: int, strict_rows: Sequence[Tuple[Sequence, Fraction]],
                      closed_rows: Sequence[Tuple[Sequence, Fraction]] = (),
                      equalities: Sequence[Tuple[Sequence, Fraction]] = ()) -> Optional[QVector]:
    """A point satisfying strict_rows strictly, closed_rows and equalities, or None"""
    result = _margin_lp(dim, strict_rows, closed_rows, equalities)
    if not result.is_optimal or result.optimum <= 0:
        return None
    return result.witness[:dim]


def max_margin(P: HPolyhedron) -> Tuple[Optional[Fraction], Optional[QVector]]:
    """Largest t <= 1 such that every constraint holds with slack t, with its maximizer

    The algebraic core of P is nonempty iff the margin is positive.

    :return: (None, None) when even the closure of P is empty
    """
    if P.is_marked_empty:
        return None, None
    result = _margin_lp(P.dim, P.rows, ())
    if not result.is_optimal:
        return None, None
    return result.optimum, result.witness[:P.dim]


def interior_point(P: HPolyhedron) -> Optional[QVector]:
    """Point with every constraint slack, i.e. a point of core(P), or None"""
    margin, x = max_margin(P)
    return x if margin is not None and margin > 0 else None


def feasible_point(P: HPolyhedron) -> Optional[QVector]:
    """Some point of P honoring strictness, or None when P is empty"""
    if P.is_marked_empty:
        return None
    strict = [(c.a, c.b) for c in P.constraints if c.strict]
    closed = [(c.a, c.b) for c in P.constraints if not c.strict]
    return strictly_feasible(P.dim, strict, closed)


def is_empty(P: HPolyhedron) -> bool:
    return feasible_point(P) is None


def support(P: HPolyhedron, c: Sequence[Fraction], sense: str = 'max') -> LPResult:
    """Optimize c over the closure of P"""
    if sense == 'max':
        return maximize(c, P.rows)
    return minimize(c, P.rows)


def implicit_equalities(P: HPolyhedron) -> List[int]:
    """Indices of the constraints holding with equality on the whole closure of P

    :return: an empty list when the closure is empty or has a nonempty core
    """
    margin, _ = max_margin(P)
    if margin is None or margin > 0:
        return []
    indices = []
    for i, con in enumerate(P.constraints):
        result = minimize(con.a, P.rows)
        if result.is_optimal and result.optimum == con.b:
            indices.append(i)
    return indices


def _is_redundant(con: Constraint, others: List[Constraint], dim: int) -> bool:
    rows = [(c.a, c.b) for c in others]
    result = maximize(con.a, rows)
    if not result.is_optimal or result.optimum > con.b:
        return False
    if not con.strict or result.optimum < con.b:
        return True
    # sup equals b: the strict constraint is implied iff the others never reach the face
    strict = [(c.a, c.b) for c in others if c.strict]
    closed = [(c.a, c.b) for c in others if not c.strict]
    return strictly_feasible(dim, strict, closed, [(con.a, con.b)]) is None


def remove_redundant(P: HPolyhedron) -> HPolyhedron:
    """Drop constraints implied by the remaining ones, scanning in order

    An empty P comes back as the canonical empty marker.
    """
    if is_empty(P):
        return HPolyhedron.empty(P.dim)
    kept = list(P.constraints)
    i = 0
    while i < len(kept):
        if _is_redundant(kept[i], kept[:i] + kept[i + 1:], P.dim):
            del kept[i]
        else:
            i += 1
    if len(kept) < len(P.constraints):
        logger.debug("removed {} redundant constraints out of {}".format(len(P.constraints) - len(kept),
                                                                         len(P.constraints)))
    return HPolyhedron(P.dim, tuple(kept))

