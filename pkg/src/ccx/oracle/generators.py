# -*- coding: utf-8 -*-
"""
Seeded random instances with guaranteed hypotheses.

Every instance is drawn from ``numpy.random.Generator(PCG64([seed, index]))`` so that the
stream of one (seed, index) pair never depends on what other instances consumed. Sets are
built around a rational center c: an axis box c +- w intersected with random halfspaces
a . x <= a . c + s with slack s >= margin, so c lies in the core with that margin.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from pymodaq.utils.logger import set_logger, get_module_name

from ..arith import QMatrix, QVector, as_rational, dot, is_zero, neg, rank
from ..calculus import PolyhedralFunction, SetValuedMap
from ..convex import SublinearFunc
from ..errors import BudgetExceeded
from ..polyhedra import Constraint, HPolyhedron, interior_point

logger = set_logger(get_module_name(__file__))

MAX_DIM = 4
MAX_CONSTRAINTS = 16
MAX_COEF = 16
SEED_LIMIT = 2 ** 64


class InstanceKind(Enum):
    SET = 'set'
    MAP = 'map'
    FUNCTION = 'function'
    MULTI_SET_SHARED_CORE = 'multi-set-shared-core'


@dataclass(frozen=True)
class InstanceSpec:
    """Budgets of one family of instances

    :param dim: ambient dimension, at most 4
    :param constraint_budget: largest number of random halfspaces added to the box
    :param coef_bound: bound on numerators and denominators of the coefficients
    :param set_count: number of sets of a multi-set-shared-core instance
    :param margin: minimal slack of the center in every constraint
    :param bounded: intersect with a box (otherwise only random halfspaces are used)
    :param qualified: when False, multi-set instances are cut by a hyperplane through the
        center so that the cores no longer meet while the intersection stays nonempty
    """
    dim: int = 2
    constraint_budget: int = 6
    coef_bound: int = 4
    kind: InstanceKind = InstanceKind.SET
    set_count: int = 2
    margin: Fraction = Fraction(1, 4)
    bounded: bool = True
    max_retries: int = 8
    qualified: bool = True

    def __post_init__(self):
        if not 1 <= self.dim <= MAX_DIM:
            raise BudgetExceeded("dimension {} outside 1..{}".format(self.dim, MAX_DIM))
        if not 1 <= self.constraint_budget <= MAX_CONSTRAINTS:
            raise BudgetExceeded("constraint budget {} outside 1..{}".format(self.constraint_budget, MAX_CONSTRAINTS))
        if not 1 <= self.coef_bound <= MAX_COEF:
            raise BudgetExceeded("coefficient bound {} outside 1..{}".format(self.coef_bound, MAX_COEF))
        object.__setattr__(self, 'margin', as_rational(self.margin))

    @classmethod
    def from_config(cls, config, dim: int, kind: InstanceKind = InstanceKind.SET, **kwargs) -> 'InstanceSpec':
        return cls(dim=dim, kind=kind,
                   constraint_budget=int(config['generator', 'constraint_budget']),
                   coef_bound=int(config['generator', 'coef_bound']),
                   margin=as_rational(str(config['generator', 'margin'])),
                   max_retries=int(config['generator', 'max_retries']),
                   **kwargs)


def make_rng(seed: int, index: int = 0) -> np.random.Generator:
    """Independent stream of instance number index under seed"""
    if not 0 <= seed < SEED_LIMIT:
        raise ValueError("seed {} is not a 64-bit unsigned integer".format(seed))
    return np.random.Generator(np.random.PCG64([seed, index]))


def random_int(rng: np.random.Generator, low: int, high: int) -> int:
    """Uniform integer in [low, high]"""
    return int(rng.integers(low, high + 1))


def random_rational(rng: np.random.Generator, bound: int) -> Fraction:
    return Fraction(random_int(rng, -bound, bound), random_int(rng, 1, bound))


def random_vector(rng: np.random.Generator, dim: int, bound: int, nonzero: bool = False) -> QVector:
    while True:
        v = tuple(Fraction(random_int(rng, -bound, bound)) for _ in range(dim))
        if not nonzero or not is_zero(v):
            return v


def random_point(rng: np.random.Generator, dim: int, bound: int) -> QVector:
    """Rational point with coordinates of the form p/q, |p| <= bound, 1 <= q <= bound"""
    return tuple(random_rational(rng, bound) for _ in range(dim))


def random_center(rng: np.random.Generator, dim: int, bound: int) -> QVector:
    return tuple(Fraction(random_int(rng, -bound, bound), bound) for _ in range(dim))


def _constraints_around(rng: np.random.Generator, spec: InstanceSpec, center: QVector,
                        widen: int = 1) -> List[Constraint]:
    dim, bound = spec.dim, spec.coef_bound
    constraints = []
    if spec.bounded:
        for k in range(dim):
            width = Fraction(random_int(rng, 1, bound), random_int(rng, 1, 2)) * widen
            e = tuple(Fraction(1 if j == k else 0) for j in range(dim))
            constraints.append(Constraint(e, center[k] + width))
            constraints.append(Constraint(tuple(-x for x in e), -center[k] + width))
    extra = random_int(rng, 1, spec.constraint_budget)
    for _ in range(extra):
        a = random_vector(rng, dim, bound, nonzero=True)
        slack = spec.margin + Fraction(random_int(rng, 0, bound), random_int(rng, 1, bound)) * widen
        constraints.append(Constraint(a, dot(a, center) + slack))
    return constraints


def random_set(rng: np.random.Generator, spec: InstanceSpec, center: Optional[QVector] = None) -> HPolyhedron:
    """Closed polyhedron with center in its core

    The candidate is kept once the margin LP certifies an interior point; after
    ``max_retries`` failures the box is widened.
    """
    center = center if center is not None else random_center(rng, spec.dim, spec.coef_bound)
    widen = 1
    attempt = 0
    while True:
        S = HPolyhedron(spec.dim, tuple(_constraints_around(rng, spec, center, widen)))
        if interior_point(S) is not None and S.as_open().contains(center):
            return S
        attempt += 1
        if attempt >= spec.max_retries:
            logger.debug("widening the generator box after {} attempts".format(attempt))
            widen *= 2
            attempt = 0


def random_sets_shared_core(rng: np.random.Generator, spec: InstanceSpec) -> Tuple[QVector, Tuple[HPolyhedron, ...]]:
    """set_count sets whose cores all contain a common center

    With ``spec.qualified`` False the first two sets are then split by a hyperplane through the
    center (a single set is flattened onto it): the center stays in every set but the cores
    have no common point.
    """
    center = random_center(rng, spec.dim, spec.coef_bound)
    sets = tuple(random_set(rng, spec, center) for _ in range(spec.set_count))
    if not all(S.as_open().contains(center) for S in sets):
        raise ArithmeticError("generated sets do not share the center {}".format(center))
    if spec.qualified:
        return center, sets
    if len(sets) == 1:
        return center, (flatten_through(rng, sets[0], center, spec.coef_bound),)
    return center, split_through(rng, sets[0], sets[1], center, spec.coef_bound) + sets[2:]


def halfspace(a: QVector, b: Fraction) -> HPolyhedron:
    """The closed halfspace a . x <= b"""
    return HPolyhedron(len(a), (Constraint(tuple(a), as_rational(b)),))


def random_cut(rng: np.random.Generator, dim: int, bound: int, support: Optional[Sequence[int]] = None) -> QVector:
    """Nonzero normal vector with entries in [-bound, bound], zero outside the support coordinates"""
    support = set(range(dim) if support is None else support)
    while True:
        a = tuple(Fraction(random_int(rng, -bound, bound)) if k in support else Fraction(0) for k in range(dim))
        if not is_zero(a):
            return a


def split_through(rng: np.random.Generator, first: HPolyhedron, second: HPolyhedron, center: QVector, bound: int,
                  support: Optional[Sequence[int]] = None) -> Tuple[HPolyhedron, HPolyhedron]:
    """first n {a . x <= a . c} and second n {a . x >= a . c}

    Both keep c, and their cores lie in opposite open halfspaces.
    """
    a = random_cut(rng, first.dim, bound, support)
    level = dot(a, center)
    return first.intersect(halfspace(a, level)), second.intersect(halfspace(neg(a), -level))


def flatten_through(rng: np.random.Generator, S: HPolyhedron, center: QVector, bound: int,
                    support: Optional[Sequence[int]] = None) -> HPolyhedron:
    """S n {a . x = a . c}, a set through c with an empty core"""
    a = random_cut(rng, S.dim, bound, support)
    level = dot(a, center)
    return S.intersect(halfspace(a, level), halfspace(neg(a), -level))


def random_map(rng: np.random.Generator, spec: InstanceSpec, dim_y: int = 1) -> SetValuedMap:
    if spec.dim + dim_y > MAX_DIM:
        raise BudgetExceeded("graph dimension {} exceeds {}".format(spec.dim + dim_y, MAX_DIM))
    graph_spec = replace(spec, dim=spec.dim + dim_y, kind=InstanceKind.SET)
    return SetValuedMap(spec.dim, dim_y, random_set(rng, graph_spec))


def random_function(rng: np.random.Generator, spec: InstanceSpec, pieces: Optional[int] = None,
                    domain: Optional[HPolyhedron] = None) -> PolyhedralFunction:
    """max of 1 to 3 random affine pieces on a random domain with nonempty core"""
    count = pieces if pieces is not None else random_int(rng, 1, 3)
    affine = [(random_vector(rng, spec.dim, spec.coef_bound), random_rational(rng, spec.coef_bound))
              for _ in range(count)]
    domain = domain if domain is not None else random_set(rng, spec)
    return PolyhedralFunction.max_affine(affine, domain)


def random_sublinear(rng: np.random.Generator, dim: int, bound: int, nonnegative: bool = True) -> SublinearFunc:
    """Finite max of random functionals; with nonnegative, 0 is among the convex combinations
    of the pieces (the last piece is minus the sum of the others)"""
    count = random_int(rng, 1, 3)
    pieces = [random_vector(rng, dim, bound) for _ in range(count)]
    if nonnegative:
        pieces.append(tuple(-sum(p[k] for p in pieces) for k in range(dim)))
    return SublinearFunc.from_coeffs(pieces)


def random_matrix(rng: np.random.Generator, rows: int, cols: int, bound: int, full_rank: bool = False) -> QMatrix:
    while True:
        A = tuple(random_vector(rng, cols, bound) for _ in range(rows))
        if not full_rank or rank(A) == min(rows, cols):
            return A


def generate_instance(spec: InstanceSpec, seed: int, index: int = 0
                      ) -> Union[HPolyhedron, SetValuedMap, PolyhedralFunction, Tuple[QVector, Tuple[HPolyhedron, ...]]]:
    """Deterministic instance of the requested kind

    :param spec: budgets and kind
    :type spec: InstanceSpec
    :param seed: 64-bit unsigned seed
    :param index: position in the instance stream
    """
    rng = make_rng(seed, index)
    if spec.kind is InstanceKind.SET:
        return random_set(rng, spec)
    if spec.kind is InstanceKind.MAP:
        return random_map(rng, spec)
    if spec.kind is InstanceKind.FUNCTION:
        return random_function(rng, spec)
    return random_sets_shared_core(rng, spec)
