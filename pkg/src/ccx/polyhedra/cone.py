# -*- coding: utf-8 -*-
"""
Finitely generated convex cones.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from ..arith import QVector, is_zero, primitive, qvector, zeros
from ..errors import DimensionError
from ..lp import in_cone
from .conversion import v_to_h
from .sets import HPolyhedron, VPolyhedron


@dataclass(frozen=True)
class Cone:
    """{sum l_i g_i : l_i >= 0}; without generators the cone is {0}"""
    dim: int
    generators: Tuple[QVector, ...] = ()

    def __post_init__(self):
        gens = set()
        for g in self.generators:
            g = qvector(g)
            if len(g) != self.dim:
                raise DimensionError("generator of dimension {} in a cone of dimension {}".format(len(g), self.dim))
            if not is_zero(g):
                gens.add(primitive(g))
        object.__setattr__(self, 'generators', tuple(sorted(gens)))

    @property
    def is_trivial(self) -> bool:
        return not self.generators

    def contains(self, v: Sequence) -> bool:
        v = qvector(v)
        if len(v) != self.dim:
            raise DimensionError("vector of dimension {} tested against a cone of dimension {}".format(
                len(v), self.dim))
        return in_cone(v, self.generators)

    def __add__(self, other: 'Cone') -> 'Cone':
        if other.dim != self.dim:
            raise DimensionError("cannot add cones of dimensions {} and {}".format(self.dim, other.dim))
        return Cone(self.dim, self.generators + other.generators)

    def to_vpolyhedron(self) -> VPolyhedron:
        return VPolyhedron(self.dim, (zeros(self.dim),), self.generators)

    def to_hpolyhedron(self) -> HPolyhedron:
        """Constraint form {x : a_j . x <= 0}"""
        return v_to_h(self.to_vpolyhedron())

    def same_cone(self, other: 'Cone') -> bool:
        return (self.dim == other.dim
                and all(other.contains(g) for g in self.generators)
                and all(self.contains(g) for g in other.generators))
