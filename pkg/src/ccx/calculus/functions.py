# -*- coding: utf-8 -*-
"""
Polyhedral convex extended-real-valued functions, stored by their epigraph in Q^(n+1)
with the last coordinate t.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

from pymodaq.utils.logger import set_logger, get_module_name

from ..arith import QVector, as_rational, qmatrix, qvector, selector, transpose, unit, zeros
from ..convex import NotAMember, normal_cone
from ..errors import DimensionError, ImproperFunctionError, InfiniteValueError, RepresentationError
from ..lp import LPStatus, minimize
from ..polyhedra import Constraint, HPolyhedron, affine_image, eliminate_variables, is_empty, v_to_h

logger = set_logger(get_module_name(__file__))

Value = Union[Fraction, float]


@dataclass(frozen=True)
class PolyhedralFunction:
    """phi : Q^dim -> Q u {+inf}, epi phi = {(x, t) : phi(x) <= t}

    Every constraint of the epigraph has a nonpositive t-coefficient, so the epigraph is
    closed upwards in t. A nonempty epigraph needs at least one negative t-coefficient,
    otherwise the function is improper and construction raises ImproperFunctionError.
    """
    dim: int
    epigraph: HPolyhedron

    def __post_init__(self):
        if self.epigraph.dim != self.dim + 1:
            raise DimensionError("epigraph of dimension {} for a function on dimension {}".format(
                self.epigraph.dim, self.dim))
        if not self.epigraph.is_closed:
            raise RepresentationError("an epigraph must be closed")
        if any(c.a[-1] > 0 for c in self.epigraph.constraints):
            raise RepresentationError("epigraph constraint with a positive t-coefficient")
        # without a row bounding t from below, every (x, t) of a nonempty epigraph recedes along (0, -1)
        if all(c.a[-1] == 0 for c in self.epigraph.constraints) and not is_empty(self.epigraph):
            raise ImproperFunctionError("the epigraph contains a downward vertical line: phi takes the value -inf")

    @classmethod
    def max_affine(cls, pieces: Sequence[Tuple[Sequence, object]],
                   domain: Optional[HPolyhedron] = None) -> 'PolyhedralFunction':
        """max_i (g_i . x + c_i), restricted to domain when given"""
        if not pieces and domain is None:
            raise ValueError("a max-affine function needs pieces or a domain")
        dim = len(pieces[0][0]) if pieces else domain.dim
        constraints = [Constraint(qvector(g) + (Fraction(-1),), -as_rational(c)) for g, c in pieces]
        if domain is not None:
            if domain.dim != dim:
                raise DimensionError("domain of dimension {} for pieces of dimension {}".format(domain.dim, dim))
            constraints += list(domain.relaxed().embed(dim + 1, 0).constraints)
        if not pieces:
            constraints.append(Constraint(zeros(dim) + (Fraction(-1),), Fraction(0)))
        return cls(dim, HPolyhedron(dim + 1, tuple(constraints)))

    @classmethod
    def indicator(cls, omega: HPolyhedron) -> 'PolyhedralFunction':
        """0 on omega, +inf outside"""
        return cls.max_affine((), omega)

    @classmethod
    def constant(cls, dim: int, value=0) -> 'PolyhedralFunction':
        return cls.max_affine([(zeros(dim), value)])

    @property
    def is_proper(self) -> bool:
        return not is_empty(self.epigraph)

    def domain(self) -> HPolyhedron:
        return eliminate_variables(self.epigraph, [self.dim])


@dataclass(frozen=True)
class Subdifferential:
    at: QVector
    set: HPolyhedron


def _slice_lp(phi: PolyhedralFunction, x: QVector):
    if len(x) != phi.dim:
        raise DimensionError("point of dimension {} for a function on dimension {}".format(len(x), phi.dim))
    M = tuple((Fraction(0),) for _ in range(phi.dim)) + ((Fraction(1),),)
    line = phi.epigraph.pullback(M, x + (Fraction(0),))
    return minimize((Fraction(1),), line.rows)


def evaluate(phi: PolyhedralFunction, x: Sequence) -> Value:
    """phi(x) as an exact rational, or math.inf / -math.inf"""
    result = _slice_lp(phi, qvector(x))
    if result.is_optimal:
        return result.optimum
    return -math.inf if result.status is LPStatus.UNBOUNDED else math.inf


def subdifferential(phi: PolyhedralFunction, x: Sequence) -> Subdifferential:
    """{f : (f, -1) in N((x, phi(x)); epi phi)}

    :raises InfiniteValueError: phi(x) is not finite
    """
    x = qvector(x)
    value = evaluate(phi, x)
    if not isinstance(value, Fraction):
        raise InfiniteValueError("phi({}) = {}".format(x, value))
    cone = normal_cone(phi.epigraph, x + (value,))
    if isinstance(cone, NotAMember):
        raise ArithmeticError("epigraph point ({}, {}) outside the epigraph".format(x, value))
    M = selector(phi.dim, range(phi.dim)) + (zeros(phi.dim),)
    dual = cone.to_hpolyhedron().pullback(M, zeros(phi.dim) + (Fraction(-1),))
    return Subdifferential(x, dual)


def func_sum(phi1: PolyhedralFunction, phi2: PolyhedralFunction) -> PolyhedralFunction:
    """phi1 + phi2 from {(x, t1, t2, t) : (x, t1) in epi phi1, (x, t2) in epi phi2, t1 + t2 <= t}"""
    if phi1.dim != phi2.dim:
        raise DimensionError("cannot add functions on dimensions {} and {}".format(phi1.dim, phi2.dim))
    n = phi1.dim
    total = n + 3
    xs = list(range(n))
    coupling = [Fraction(0)] * total
    coupling[n], coupling[n + 1], coupling[n + 2] = Fraction(1), Fraction(1), Fraction(-1)
    system = phi1.epigraph.pullback(selector(total, xs + [n])).intersect(
        phi2.epigraph.pullback(selector(total, xs + [n + 1])),
        HPolyhedron(total, (Constraint(tuple(coupling), Fraction(0)),)))
    return PolyhedralFunction(n, eliminate_variables(system, [n, n + 1]))


def precompose_linear(phi: PolyhedralFunction, A: Sequence[Sequence]) -> PolyhedralFunction:
    """phi o A for a matrix A with phi.dim rows"""
    A = qmatrix(A)
    if len(A) != phi.dim:
        raise DimensionError("matrix with {} rows before a function on dimension {}".format(len(A), phi.dim))
    n = len(A[0]) if A else 0
    M = tuple(row + (Fraction(0),) for row in A) + (unit(n + 1, n),)
    return PolyhedralFunction(n, phi.epigraph.pullback(M))


def adjoint_image(A: Sequence[Sequence], S: HPolyhedron) -> HPolyhedron:
    """A* S = {A^T g : g in S}"""
    A = qmatrix(A)
    if len(A) != S.dim:
        raise DimensionError("set of dimension {} for the adjoint of a map into dimension {}".format(S.dim, len(A)))
    return v_to_h(affine_image(S, transpose(A)))
