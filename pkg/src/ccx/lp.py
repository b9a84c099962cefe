# -*- coding: utf-8 -*-
"""
Exact rational linear programming.

Two-phase primal simplex on a dense tableau of Fractions with Bland's rule. Variables are
free; each is split into a positive and a negative part. Equalities are turned into two
opposite inequalities so that a single code path handles every problem.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from pymodaq.utils.logger import set_logger, get_module_name

from .arith import QVector, as_rational, dot, primitive, qvector
from .errors import DimensionError

logger = set_logger(get_module_name(__file__))


class Sense(Enum):
    MAX = 'max'
    MIN = 'min'


class Relation(Enum):
    LE = '<='
    EQ = '='


class LPStatus(Enum):
    OPTIMAL = 'optimal'
    INFEASIBLE = 'infeasible'
    UNBOUNDED = 'unbounded'


@dataclass(frozen=True)
class LinearConstraint:
    a: QVector
    b: Fraction
    relation: Relation = Relation.LE


@dataclass(frozen=True)
class LPProblem:
    """optimize objective . x subject to a . x (<= or =) b for every constraint, x free"""
    objective: QVector
    constraints: Tuple[LinearConstraint, ...] = ()
    sense: Sense = Sense.MAX

    def __post_init__(self):
        for k, con in enumerate(self.constraints):
            if len(con.a) != self.dim:
                raise DimensionError("constraint {} has {} coefficients, the problem has {} variables".format(
                    k, len(con.a), self.dim))

    @property
    def dim(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class LPResult:
    """Outcome of :func:`solve_lp`

    ``witness`` is an optimal point, ``ray`` a feasible recession direction improving the
    objective and ``infeasibility`` the positive phase-one optimum proving infeasibility.
    """
    status: LPStatus
    optimum: Optional[Fraction] = None
    witness: Optional[QVector] = None
    ray: Optional[QVector] = None
    infeasibility: Optional[Fraction] = None

    @property
    def is_optimal(self) -> bool:
        return self.status is LPStatus.OPTIMAL


class _Tableau:
    """Canonical-form tableau: rows[i] . y = rhs[i] with basis[i] the basic column of row i"""

    def __init__(self, rows: List[List[Fraction]], rhs: List[Fraction], basis: List[int], width: int):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.width = width

    def pivot(self, r: int, c: int):
        row = self.rows[r]
        p = row[c]
        if p != 1:
            self.rows[r] = row = [x / p for x in row]
            self.rhs[r] = self.rhs[r] / p
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            factor = other[c]
            if factor == 0:
                continue
            self.rows[i] = [x - factor * y for x, y in zip(other, row)]
            self.rhs[i] = self.rhs[i] - factor * self.rhs[r]
        self.basis[r] = c

    def reduced_cost(self, cost: Sequence[Fraction], j: int) -> Fraction:
        return cost[j] - sum((cost[b] * self.rows[i][j] for i, b in enumerate(self.basis)), Fraction(0))

    def value(self, cost: Sequence[Fraction]) -> Fraction:
        return sum((cost[b] * self.rhs[i] for i, b in enumerate(self.basis)), Fraction(0))

    def maximize(self, cost: Sequence[Fraction], allowed: Sequence[bool]) -> Optional[int]:
        """Run Bland's rule until optimality; returns the entering column proving unboundedness, if any"""
        while True:
            in_basis = set(self.basis)
            entering = None
            for j in range(self.width):
                if allowed[j] and j not in in_basis and self.reduced_cost(cost, j) > 0:
                    entering = j
                    break
            if entering is None:
                return None
            leaving = None
            best = None
            for i, row in enumerate(self.rows):
                coef = row[entering]
                if coef > 0:
                    key = (self.rhs[i] / coef, self.basis[i])
                    if best is None or key < best:
                        best = key
                        leaving = i
            if leaving is None:
                return entering
            self.pivot(leaving, entering)

    def point(self) -> List[Fraction]:
        y = [Fraction(0)] * self.width
        for i, b in enumerate(self.basis):
            y[b] = self.rhs[i]
        return y

    def direction(self, entering: int) -> List[Fraction]:
        d = [Fraction(0)] * self.width
        d[entering] = Fraction(1)
        for i, b in enumerate(self.basis):
            d[b] = -self.rows[i][entering]
        return d


def _inequalities(problem: LPProblem) -> List[Tuple[QVector, Fraction]]:
    rows = []
    for con in problem.constraints:
        rows.append((con.a, con.b))
        if con.relation is Relation.EQ:
            rows.append((tuple(-x for x in con.a), -con.b))
    return rows


def solve_lp(problem: LPProblem) -> LPResult:
    """Solve a linear program exactly

    :param problem: the problem
    :type problem: LPProblem
    :return: optimal value with an optimal witness, an improving ray, or the infeasibility certificate
    :rtype: LPResult
    """
    n = problem.dim
    rows = _inequalities(problem)
    m = len(rows)
    objective = problem.objective if problem.sense is Sense.MAX else tuple(-c for c in problem.objective)

    # columns: x+ (n), x- (n), slacks (m), artificials (one per row with negative rhs)
    negative_rows = [i for i, (_, b) in enumerate(rows) if b < 0]
    n_art = len(negative_rows)
    width = 2 * n + m + n_art
    first_art = 2 * n + m
    tab_rows, rhs, basis = [], [], []
    art_index = {i: first_art + k for k, i in enumerate(negative_rows)}
    for i, (a, b) in enumerate(rows):
        row = [Fraction(0)] * width
        sign = -1 if b < 0 else 1
        for k in range(n):
            row[k] = sign * a[k]
            row[n + k] = -sign * a[k]
        row[2 * n + i] = Fraction(sign)
        if b < 0:
            row[art_index[i]] = Fraction(1)
            basis.append(art_index[i])
        else:
            basis.append(2 * n + i)
        tab_rows.append(row)
        rhs.append(sign * b)
    tableau = _Tableau(tab_rows, rhs, basis, width)

    if n_art:
        phase_one_cost = [Fraction(0)] * first_art + [Fraction(-1)] * n_art
        tableau.maximize(phase_one_cost, [True] * width)
        value = tableau.value(phase_one_cost)
        if value < 0:
            logger.debug("phase one ended at {}, problem infeasible".format(value))
            return LPResult(LPStatus.INFEASIBLE, infeasibility=-value)
        # drive the remaining (zero-level) artificials out of the basis
        i = 0
        while i < len(tableau.rows):
            if tableau.basis[i] >= first_art:
                c = next((j for j in range(first_art) if tableau.rows[i][j] != 0), None)
                if c is None:
                    # redundant row
                    del tableau.rows[i]
                    del tableau.rhs[i]
                    del tableau.basis[i]
                    continue
                tableau.pivot(i, c)
            i += 1

    cost = list(objective) + [-c for c in objective] + [Fraction(0)] * (m + n_art)
    allowed = [j < first_art for j in range(width)]
    entering = tableau.maximize(cost, allowed)
    if entering is not None:
        d = tableau.direction(entering)
        ray = primitive(tuple(d[k] - d[n + k] for k in range(n)))
        logger.debug("objective unbounded along {}".format(ray))
        return LPResult(LPStatus.UNBOUNDED, ray=ray)
    y = tableau.point()
    witness = tuple(y[k] - y[n + k] for k in range(n))
    return LPResult(LPStatus.OPTIMAL, optimum=dot(problem.objective, witness), witness=witness)


def maximize(objective, inequalities=(), equalities=()) -> LPResult:
    """Shortcut building the :class:`LPProblem` from (a, b) pairs

    :param objective: coefficients of the objective
    :param inequalities: pairs (a, b) read as a . x <= b
    :param equalities: pairs (a, b) read as a . x = b
    """
    cons = [LinearConstraint(qvector(a), as_rational(b)) for a, b in inequalities]
    cons += [LinearConstraint(qvector(a), as_rational(b), Relation.EQ) for a, b in equalities]
    return solve_lp(LPProblem(qvector(objective), tuple(cons), Sense.MAX))


def minimize(objective, inequalities=(), equalities=()) -> LPResult:
    cons = [LinearConstraint(qvector(a), as_rational(b)) for a, b in inequalities]
    cons += [LinearConstraint(qvector(a), as_rational(b), Relation.EQ) for a, b in equalities]
    return solve_lp(LPProblem(qvector(objective), tuple(cons), Sense.MIN))


def find_point(dim, inequalities=(), equalities=()) -> Optional[QVector]:
    """A feasible point of the system, or None"""
    result = maximize((0,) * dim, inequalities, equalities)
    return result.witness if result.is_optimal else None


def in_convex_hull(point: Sequence[Fraction], points: Sequence[Sequence[Fraction]],
                   rays: Sequence[Sequence[Fraction]] = ()) -> bool:
    """Whether point lies in conv(points) + cone(rays), decided by one feasibility LP"""
    k, r = len(points), len(rays)
    dim = len(point)
    if k == 0:
        return False
    nvar = k + r
    equalities = []
    for coord in range(dim):
        a = [p[coord] for p in points] + [q[coord] for q in rays]
        equalities.append((a, point[coord]))
    equalities.append(([1] * k + [0] * r, 1))
    inequalities = [(tuple(-1 if j == i else 0 for j in range(nvar)), 0) for i in range(nvar)]
    return find_point(nvar, inequalities, equalities) is not None


def in_cone(vector: Sequence[Fraction], generators: Sequence[Sequence[Fraction]]) -> bool:
    """Whether vector is a nonnegative combination of the generators"""
    if all(x == 0 for x in vector):
        return True
    if not generators:
        return False
    k = len(generators)
    equalities = [([g[coord] for g in generators], vector[coord]) for coord in range(len(vector))]
    inequalities = [(tuple(-1 if j == i else 0 for j in range(k)), 0) for i in range(k)]
    return find_point(k, inequalities, equalities) is not None
