# -*- coding: utf-8 -*-
"""
Exact conversion between constraint form and generator form by the double description
method, run on the homogenized cone {(x, t) : a . x - b t <= 0, t >= 0}.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from pymodaq.utils.logger import set_logger, get_module_name

from ..arith import QVector, dot, is_zero, neg, primitive, rank, scale, sub, unit, zeros
from ..errors import DimensionError, RepresentationError
from .sets import Constraint, HPolyhedron, VPolyhedron

logger = set_logger(get_module_name(__file__))


def double_description(rows: Sequence[QVector], d: int) -> Tuple[List[QVector], List[QVector]]:
    """Generators of the cone {z in Q^d : g . z <= 0 for every row g}

    :return: (lineality basis, extreme rays), rays primitive and sorted
    """
    lineality: List[QVector] = [unit(d, k) for k in range(d)]
    rays: List[QVector] = []
    processed: List[QVector] = []
    for g in rows:
        if is_zero(g):
            continue
        idx = next((k for k, line in enumerate(lineality) if dot(g, line) != 0), None)
        if idx is not None:
            pivot = lineality[idx]
            gp = dot(g, pivot)
            if gp > 0:
                pivot, gp = neg(pivot), -gp
            lineality = [primitive(sub(line, scale(pivot, dot(g, line) / gp)))
                         for k, line in enumerate(lineality) if k != idx]
            rays = [primitive(sub(r, scale(pivot, dot(g, r) / gp))) for r in rays]
            rays.append(primitive(pivot))
        else:
            values = [dot(g, r) for r in rays]
            positive = [(r, v) for r, v in zip(rays, values) if v > 0]
            negative = [(r, v) for r, v in zip(rays, values) if v < 0]
            kept = {r: None for r, v in zip(rays, values) if v <= 0}
            target = d - len(lineality) - 2
            if target >= 0:
                active = {r: frozenset(k for k, h in enumerate(processed) if dot(h, r) == 0)
                          for r, _ in positive + negative}
                for p, vp in positive:
                    for n, vn in negative:
                        common = active[p] & active[n]
                        if len(common) < target:
                            continue
                        if rank(tuple(processed[k] for k in sorted(common))) != target:
                            continue
                        new = primitive(sub(scale(n, vp), scale(p, vn)))
                        if not is_zero(new):
                            kept[new] = None
            rays = list(kept)
        processed.append(g)
    return lineality, sorted(set(rays))


def h_to_v(P: HPolyhedron) -> VPolyhedron:
    """Generator form of a closed constraint-form set"""
    if not P.is_closed:
        raise RepresentationError("conversion needs a closed set, relax strict constraints first")
    if P.is_marked_empty:
        return VPolyhedron(P.dim)
    rows = [tuple(c.a) + (-c.b,) for c in P.constraints]
    rows.append(zeros(P.dim) + (Fraction(-1),))
    lineality, rays = double_description(rows, P.dim + 1)
    vertices, directions = [], []
    for r in rays:
        t = r[-1]
        if t > 0:
            vertices.append(tuple(x / t for x in r[:-1]))
        else:
            directions.append(r[:-1])
    for line in lineality:
        directions.append(line[:-1])
        directions.append(neg(line[:-1]))
    logger.debug("H to V: {} constraints gave {} vertices and {} rays".format(
        len(P.constraints), len(vertices), len(directions)))
    return VPolyhedron(P.dim, tuple(vertices), tuple(directions))


def v_to_h(V: VPolyhedron) -> HPolyhedron:
    """Constraint form of a generator-form set, read off the polar cone"""
    if V.is_empty:
        return HPolyhedron.empty(V.dim)
    rows = [tuple(v) + (Fraction(-1),) for v in V.vertices]
    rows += [tuple(r) + (Fraction(0),) for r in V.rays]
    lineality, rays = double_description(rows, V.dim + 1)
    constraints = [Constraint(r[:-1], r[-1]) for r in rays]
    for line in lineality:
        constraints.append(Constraint(line[:-1], line[-1]))
        constraints.append(Constraint(neg(line[:-1]), -line[-1]))
    return HPolyhedron(V.dim, tuple(constraints)).sorted()


def convert_representation(P: Union[HPolyhedron, VPolyhedron]) -> Union[HPolyhedron, VPolyhedron]:
    """Exact conversion to the other form

    :raises RepresentationError: P has strict constraints
    """
    if isinstance(P, HPolyhedron):
        return h_to_v(P)
    if isinstance(P, VPolyhedron):
        return v_to_h(P)
    raise TypeError("cannot convert {!r}".format(type(P)))


def includes(P: HPolyhedron, Q: HPolyhedron) -> bool:
    """Whether Q is a subset of P, both closed

    Decided on the generators of Q: every vertex satisfies P and every ray r has a . r <= 0.
    """
    if P.dim != Q.dim:
        raise DimensionError("cannot compare sets of dimensions {} and {}".format(P.dim, Q.dim))
    if not (P.is_closed and Q.is_closed):
        raise RepresentationError("inclusion test needs closed sets")
    VQ = h_to_v(Q)
    if VQ.is_empty:
        return True
    if not all(P.contains(v) for v in VQ.vertices):
        return False
    return all(dot(c.a, r) <= 0 for r in VQ.rays for c in P.constraints)
