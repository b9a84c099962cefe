# -*- coding: utf-8 -*-
"""
Linear functionals on Q^n and finite maxima of them.

A functional is identified with its coefficient vector through the dot product.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from ..arith import QVector, dot, is_zero, qvector
from ..errors import DimensionError


@dataclass(frozen=True)
class Functional:
    coeffs: QVector

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', qvector(self.coeffs))

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return is_zero(self.coeffs)

    def __call__(self, x: Sequence[Fraction]) -> Fraction:
        return dot(self.coeffs, x)

    def scaled(self, factor) -> 'Functional':
        return Functional(tuple(factor * c for c in self.coeffs))


@dataclass(frozen=True)
class SublinearFunc:
    """p(x) = max_i pieces[i](x)"""
    pieces: Tuple[Functional, ...]

    def __post_init__(self):
        pieces = tuple(p if isinstance(p, Functional) else Functional(p) for p in self.pieces)
        if not pieces:
            raise ValueError("a sublinear function needs at least one piece")
        if len({p.dim for p in pieces}) > 1:
            raise DimensionError("pieces of a sublinear function must share their dimension")
        object.__setattr__(self, 'pieces', pieces)

    @classmethod
    def from_coeffs(cls, rows: Sequence[Sequence]) -> 'SublinearFunc':
        return cls(tuple(Functional(qvector(r)) for r in rows))

    @property
    def dim(self) -> int:
        return self.pieces[0].dim

    @property
    def coeff_rows(self) -> Tuple[QVector, ...]:
        return tuple(p.coeffs for p in self.pieces)

    def __call__(self, x: Sequence[Fraction]) -> Fraction:
        if len(x) != self.dim:
            raise DimensionError("point of dimension {} for a function on dimension {}".format(len(x), self.dim))
        return max(p(x) for p in self.pieces)
