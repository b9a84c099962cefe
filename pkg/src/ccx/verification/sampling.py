# -*- coding: utf-8 -*-
"""
Instance and test-point helpers shared by the suites.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, TypeVar

import numpy as np

from ..arith import QVector, combine
from ..oracle import InstanceKind, InstanceSpec, random_point
from ..polyhedra import HPolyhedron, interior_point, sample_points

T = TypeVar('T')

LAMBDAS = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))


def spec_for(dim: int, kind: InstanceKind = InstanceKind.SET, **kwargs) -> InstanceSpec:
    from .. import config
    return InstanceSpec.from_config(config, dim, kind, **kwargs)


def pick(rng: np.random.Generator, items: Sequence[T], k: int) -> List[T]:
    """k items chosen without replacement, in their original order"""
    items = list(items)
    if len(items) <= k:
        return items
    chosen = sorted(int(i) for i in rng.choice(len(items), size=k, replace=False))
    return [items[i] for i in chosen]


def blend(lam: Fraction, a: Sequence[Fraction], b: Sequence[Fraction]) -> QVector:
    """lam * a + (1 - lam) * b"""
    return combine((lam, 1 - lam), (a, b), len(a))


def candidate_points(rng: np.random.Generator, S: HPolyhedron, count: int = 4, outside: int = 2,
                 bound: int = 4) -> List[QVector]:
    """Closure samples of S, its max-margin point and a few random points with coordinates in [-bound, bound]"""
    points = pick(rng, sample_points(S), count)
    inner = interior_point(S)
    if inner is not None:
        points.append(inner)
    points += [random_point(rng, S.dim, bound) for _ in range(outside)]
    return points
