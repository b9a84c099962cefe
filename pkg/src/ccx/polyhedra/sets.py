# -*- coding: utf-8 -*-
"""
Constraint form and generator form of convex polyhedral sets.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple

from ..arith import (QMatrix, QVector, as_rational, dot, is_zero, neg, primitive, qvector, zeros)
from ..errors import DimensionError


class Openness(Enum):
    CLOSED = 'closed'
    OPEN = 'open'
    MIXED = 'mixed'


@dataclass(frozen=True)
class Constraint:
    """Halfspace a . x <= b, or a . x < b when strict"""
    a: QVector
    b: Fraction
    strict: bool = False

    def normalized(self) -> 'Constraint':
        """Same halfspace with coprime integer coefficients; zero rows keep only the sign of b"""
        if is_zero(self.a):
            sign = (self.b > 0) - (self.b < 0)
            return Constraint(tuple(self.a), Fraction(sign), self.strict)
        scaled = primitive(tuple(self.a) + (self.b,))
        return Constraint(scaled[:-1], scaled[-1], self.strict)

    @property
    def is_trivial(self) -> bool:
        return is_zero(self.a)

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        lhs = dot(self.a, x)
        return lhs < self.b if self.strict else lhs <= self.b

    def slack(self, x: Sequence[Fraction]) -> Fraction:
        return self.b - dot(self.a, x)

    def with_strict(self, strict: bool) -> 'Constraint':
        return Constraint(self.a, self.b, strict)


@dataclass(frozen=True)
class HPolyhedron:
    """Convex set {x : a_i . x <= b_i (or < b_i when strict) for every constraint}

    Constraints are stored normalized and without duplicates. Trivially true zero rows are
    dropped; an unsatisfiable zero row collapses the set to the canonical empty marker
    ``0 . x <= -1``.
    """
    dim: int
    constraints: Tuple[Constraint, ...] = ()

    def __post_init__(self):
        merged: Dict[Tuple[QVector, Fraction], bool] = {}
        empty = False
        for con in self.constraints:
            if len(con.a) != self.dim:
                raise DimensionError("constraint with {} coefficients in a set of dimension {}".format(
                    len(con.a), self.dim))
            con = Constraint(qvector(con.a), as_rational(con.b), bool(con.strict)).normalized()
            if con.is_trivial:
                holds = con.b > 0 if con.strict else con.b >= 0
                if not holds:
                    empty = True
                continue
            key = (con.a, con.b)
            merged[key] = merged.get(key, False) or con.strict
        if empty:
            canonical = (Constraint(zeros(self.dim), Fraction(-1)),)
        else:
            canonical = tuple(Constraint(a, b, strict) for (a, b), strict in merged.items())
        object.__setattr__(self, 'constraints', canonical)

    @classmethod
    def from_rows(cls, dim: int, rows: Iterable[Tuple[Sequence, object]],
                  openness: Openness = Openness.CLOSED) -> 'HPolyhedron':
        """Build from (a, b) pairs, all strict when openness is OPEN"""
        strict = openness is Openness.OPEN
        return cls(dim, tuple(Constraint(qvector(a), as_rational(b), strict) for a, b in rows))

    @classmethod
    def universe(cls, dim: int) -> 'HPolyhedron':
        return cls(dim)

    @classmethod
    def empty(cls, dim: int) -> 'HPolyhedron':
        return cls(dim, (Constraint(zeros(dim), Fraction(-1)),))

    @classmethod
    def box(cls, lower: Sequence, upper: Sequence, openness: Openness = Openness.CLOSED) -> 'HPolyhedron':
        dim = len(lower)
        rows = []
        for k in range(dim):
            e = tuple(1 if j == k else 0 for j in range(dim))
            rows.append((e, upper[k]))
            rows.append((tuple(-x for x in e), -as_rational(lower[k])))
        return cls.from_rows(dim, rows, openness)

    @property
    def openness(self) -> Openness:
        strict = [c.strict for c in self.constraints]
        if strict and all(strict):
            return Openness.OPEN
        if any(strict):
            return Openness.MIXED
        return Openness.CLOSED

    @property
    def is_closed(self) -> bool:
        return not any(c.strict for c in self.constraints)

    @property
    def is_marked_empty(self) -> bool:
        return len(self.constraints) == 1 and self.constraints[0].is_trivial

    @property
    def rows(self) -> Tuple[Tuple[QVector, Fraction], ...]:
        return tuple((c.a, c.b) for c in self.constraints)

    def contains(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.dim:
            raise DimensionError("point of dimension {} tested against a set of dimension {}".format(
                len(x), self.dim))
        return all(c.satisfied_by(x) for c in self.constraints)

    def relaxed(self) -> 'HPolyhedron':
        """Same constraints, none strict"""
        return HPolyhedron(self.dim, tuple(c.with_strict(False) for c in self.constraints))

    def as_open(self) -> 'HPolyhedron':
        """Same constraints, all strict"""
        if self.is_marked_empty:
            return self
        return HPolyhedron(self.dim, tuple(c.with_strict(True) for c in self.constraints))

    def sorted(self) -> 'HPolyhedron':
        return HPolyhedron(self.dim, tuple(sorted(self.constraints, key=lambda c: (c.a, c.b, c.strict))))

    def intersect(self, *others: 'HPolyhedron') -> 'HPolyhedron':
        constraints = list(self.constraints)
        for other in others:
            if other.dim != self.dim:
                raise DimensionError("cannot intersect sets of dimensions {} and {}".format(self.dim, other.dim))
            constraints.extend(other.constraints)
        return HPolyhedron(self.dim, tuple(constraints))

    def pullback(self, M: QMatrix, shift: Optional[Sequence[Fraction]] = None) -> 'HPolyhedron':
        """The set {v : M v + shift in self}

        :param M: matrix with ``self.dim`` rows
        :param shift: translation in the ambient space of self, zero by default
        """
        if len(M) != self.dim:
            raise DimensionError("pullback matrix has {} rows, the set has dimension {}".format(len(M), self.dim))
        cols = len(M[0]) if M else 0
        shift = qvector(shift) if shift is not None else zeros(self.dim)
        constraints = []
        for c in self.constraints:
            a = tuple(sum((c.a[i] * M[i][j] for i in range(self.dim)), Fraction(0)) for j in range(cols))
            constraints.append(Constraint(a, c.b - dot(c.a, shift), c.strict))
        return HPolyhedron(cols, tuple(constraints))

    def embed(self, total_dim: int, offset: int) -> 'HPolyhedron':
        """Cylinder over self: coordinates offset .. offset+dim-1 of a larger space carry the set"""
        if offset < 0 or offset + self.dim > total_dim:
            raise DimensionError("cannot embed dimension {} at offset {} into dimension {}".format(
                self.dim, offset, total_dim))
        tail = total_dim - offset - self.dim
        return HPolyhedron(total_dim, tuple(
            Constraint(zeros(offset) + c.a + zeros(tail), c.b, c.strict) for c in self.constraints))

    def negated(self) -> 'HPolyhedron':
        """The reflected set -P"""
        return HPolyhedron(self.dim, tuple(Constraint(neg(c.a), c.b, c.strict) for c in self.constraints))

    def translated(self, v: Sequence[Fraction]) -> 'HPolyhedron':
        """The set P + v"""
        return HPolyhedron(self.dim, tuple(Constraint(c.a, c.b + dot(c.a, v), c.strict) for c in self.constraints))


@dataclass(frozen=True)
class VPolyhedron:
    """conv(vertices) + cone(rays); lineality is carried by opposite ray pairs

    The empty set has neither vertices nor rays.
    """
    dim: int
    vertices: Tuple[QVector, ...] = ()
    rays: Tuple[QVector, ...] = ()

    def __post_init__(self):
        vertices = {qvector(v) for v in self.vertices}
        rays = {primitive(qvector(r)) for r in self.rays}
        for v in vertices | rays:
            if len(v) != self.dim:
                raise DimensionError("generator of dimension {} in a set of dimension {}".format(len(v), self.dim))
        rays = {r for r in rays if not is_zero(r)}
        if not vertices:
            rays = set()
        object.__setattr__(self, 'vertices', tuple(sorted(vertices)))
        object.__setattr__(self, 'rays', tuple(sorted(rays)))

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def has_lineality(self) -> bool:
        rays = set(self.rays)
        return any(neg(r) in rays for r in rays)

    def negated(self) -> 'VPolyhedron':
        return VPolyhedron(self.dim, tuple(neg(v) for v in self.vertices), tuple(neg(r) for r in self.rays))
