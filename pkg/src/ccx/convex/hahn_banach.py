# -*- coding: utf-8 -*-
"""
Extension of a linear functional g on a subspace Y = span(B) to a functional f on Q^n
dominated by a sublinear p.

Two constructions are available: the one-direction-at-a-time extension with midpoint
choices, and the construction separating a point from {p < 1} + ker g.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from pymodaq.utils.logger import set_logger, get_module_name

from ..arith import (QMatrix, QVector, combine, kernel, qmatrix, qvector, rank, solve_linear_system,
                     transpose, unit, zeros)
from ..errors import DimensionError, DominationError, PreconditionUnmet
from ..lp import in_convex_hull, maximize, minimize
from ..polyhedra import VPolyhedron, to_vpolyhedron, v_to_h
from .functionals import Functional, SublinearFunc
from .core import sublevel_open
from .separation import Inseparable, separate_point

logger = set_logger(get_module_name(__file__))


def _columns(basis: QMatrix, dim: int) -> List[QVector]:
    basis = qmatrix(basis)
    if basis and len(basis) != dim:
        raise DimensionError("basis vectors have {} coordinates, p lives in dimension {}".format(len(basis), dim))
    return list(transpose(basis)) if basis else []


def check_domination(p: SublinearFunc, columns: Sequence[QVector], values: Sequence[Fraction]):
    """Verify g <= p on span(columns) with one LP over (z, s)

    maximize g(z) - s subject to piece(B z) <= s for every piece; the optimum is 0 exactly
    when g is dominated.

    :raises DominationError: with a point of Y where g exceeds p
    """
    k = len(columns)
    if len(values) != k:
        raise DimensionError("{} values for {} basis vectors".format(len(values), k))
    if k == 0:
        return
    rows = []
    for c in p.coeff_rows:
        rows.append(tuple(sum((c[i] * w[i] for i in range(p.dim)), Fraction(0)) for w in columns) + (Fraction(-1),))
    objective = tuple(values) + (Fraction(-1),)
    result = maximize(objective, [(r, 0) for r in rows])
    if result.is_optimal and result.optimum <= 0:
        return
    z = result.ray[:k] if result.ray is not None else result.witness[:k]
    witness = combine(z, columns, p.dim)
    raise DominationError("g is not dominated by p on the subspace", witness)


def _independent(columns: Sequence[QVector], values: Sequence[Fraction]) -> Tuple[List[QVector], List[Fraction]]:
    kept, kept_values = [], []
    for w, v in zip(columns, values):
        if rank(tuple(kept + [w])) > len(kept):
            kept.append(w)
            kept_values.append(v)
    return kept, kept_values


def _certify(p: SublinearFunc, f: QVector, columns: Sequence[QVector], values: Sequence[Fraction]) -> Functional:
    f = Functional(f)
    if any(f(w) != v for w, v in zip(columns, values)):
        raise ArithmeticError("extension does not agree with g on the subspace")
    if not in_convex_hull(f.coeffs, p.coeff_rows):
        raise ArithmeticError("extension is not dominated by p")
    return f


def _extension_interval(p: SublinearFunc, W: Sequence[QVector], vals: Sequence[Fraction],
                        v: QVector) -> Tuple[Fraction, Fraction]:
    """[sup_y g(y) - p(y - v), inf_y p(y + v) - g(y)] over y in span(W)"""
    k = len(W)
    lo_rows, hi_rows = [], []
    for c in p.coeff_rows:
        cw = tuple(sum((c[i] * w[i] for i in range(p.dim)), Fraction(0)) for w in W) + (Fraction(-1),)
        cv = sum((c[i] * v[i] for i in range(p.dim)), Fraction(0))
        lo_rows.append((cw, cv))
        hi_rows.append((cw, -cv))
    lo = maximize(tuple(vals) + (Fraction(-1),), lo_rows)
    hi = minimize(tuple(-x for x in vals) + (Fraction(1),), hi_rows)
    if not (lo.is_optimal and hi.is_optimal) or lo.optimum > hi.optimum:
        raise DominationError("empty extension interval along {}".format(v))
    return lo.optimum, hi.optimum


def hahn_banach_extend(p: SublinearFunc, basis: QMatrix, values: Sequence) -> Functional:
    """Extend g, given by its values on the columns of basis, to f <= p on Q^n

    Complementary directions are the standard unit vectors in order; the value on each is
    the midpoint of its admissible interval.

    :param p: dominating sublinear function
    :type p: SublinearFunc
    :param basis: n x k matrix whose columns span Y
    :param values: g on each column
    :raises DominationError: g is not dominated by p on Y
    :return: the extension, certified
    :rtype: Functional
    """
    columns = _columns(basis, p.dim)
    values = qvector(values)
    check_domination(p, columns, values)
    W, vals = _independent(columns, values)
    for k in range(p.dim):
        v = unit(p.dim, k)
        if rank(tuple(W + [v])) == len(W):
            continue
        lo, hi = _extension_interval(p, W, vals, v)
        logger.debug("direction e{}: interval [{}, {}]".format(k, lo, hi))
        W.append(v)
        vals.append((lo + hi) / 2)
    f = solve_linear_system(tuple(W), tuple(vals))
    return _certify(p, f, columns, values)


def hahn_banach_via_separation(p: SublinearFunc, basis: QMatrix, values: Sequence) -> Functional:
    """Extend g by separating a point y0 with g(y0) = 1 from {p < 1} + ker g

    :raises PreconditionUnmet: g vanishes on Y, or p takes negative values
    :raises DominationError: g is not dominated by p on Y
    """
    columns = _columns(basis, p.dim)
    values = qvector(values)
    check_domination(p, columns, values)
    W, vals = _independent(columns, values)
    j = next((i for i, v in enumerate(vals) if v != 0), None)
    if j is None:
        raise PreconditionUnmet('g != 0 on Y', "g vanishes on Y, use hahn_banach_extend")
    if not in_convex_hull(zeros(p.dim), p.coeff_rows):
        raise PreconditionUnmet('p >= 0', "the separation construction needs a nonnegative p")
    y0 = tuple(x / vals[j] for x in W[j])
    ker_g = [combine(z, W, p.dim) for z in kernel((tuple(vals),))]
    omega = to_vpolyhedron(sublevel_open(p))
    lines = [d for w in ker_g for d in (w, tuple(-x for x in w))]
    lam = v_to_h(VPolyhedron(p.dim, omega.vertices, omega.rays + tuple(lines))).as_open()
    result = separate_point(lam, y0)
    if isinstance(result, Inseparable):
        raise DominationError("the point y0 lies in {p < 1} + ker g", y0)
    h = result.functional
    f = h.scaled(1 / h(y0)).coeffs
    return _certify(p, f, columns, values)
