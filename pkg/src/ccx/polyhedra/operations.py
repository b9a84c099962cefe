# -*- coding: utf-8 -*-
"""
Set algebra on polyhedra: membership, products, Minkowski sums, affine images and exact
set comparison.
"""
from __future__ import annotations

from typing import Optional, Sequence, Union

from pymodaq.utils.logger import set_logger, get_module_name

from ..arith import QMatrix, QVector, add, matvec, qmatrix, qvector, zeros
from ..errors import DimensionError, RepresentationError
from .conversion import h_to_v, includes, v_to_h
from .queries import is_empty, strictly_feasible
from .sets import HPolyhedron, Openness, VPolyhedron

logger = set_logger(get_module_name(__file__))


def contains_point(P: HPolyhedron, x: Sequence) -> bool:
    """Exact membership, strict constraints must hold strictly"""
    return P.contains(qvector(x))


def product(P: HPolyhedron, Q: HPolyhedron) -> HPolyhedron:
    """P x Q, each factor keeping its own strictness"""
    total = P.dim + Q.dim
    return P.embed(total, 0).intersect(Q.embed(total, P.dim))


def to_hpolyhedron(P: Union[HPolyhedron, VPolyhedron]) -> HPolyhedron:
    return P if isinstance(P, HPolyhedron) else v_to_h(P)


def to_vpolyhedron(P: Union[HPolyhedron, VPolyhedron]) -> VPolyhedron:
    """Generator form; an open or mixed set is replaced by its closure"""
    if isinstance(P, VPolyhedron):
        return P
    if not P.is_closed:
        if is_empty(P):
            return VPolyhedron(P.dim)
        P = P.relaxed()
    return h_to_v(P)


def _canonical(V: VPolyhedron) -> VPolyhedron:
    """Drop redundant generators by a round trip through constraint form"""
    return h_to_v(v_to_h(V))


def minkowski_sum(P: VPolyhedron, Q: VPolyhedron) -> VPolyhedron:
    """P + Q from pairwise vertex sums and the union of the rays"""
    if P.dim != Q.dim:
        raise DimensionError("cannot add sets of dimensions {} and {}".format(P.dim, Q.dim))
    if P.is_empty or Q.is_empty:
        return VPolyhedron(P.dim)
    vertices = tuple(add(p, q) for p in P.vertices for q in Q.vertices)
    return _canonical(VPolyhedron(P.dim, vertices, P.rays + Q.rays))


def affine_image(P: Union[HPolyhedron, VPolyhedron], A: QMatrix, shift: Optional[Sequence] = None) -> VPolyhedron:
    """{A x + shift : x in P}, computed on generators

    :param A: matrix with ``P.dim`` columns
    :param shift: translation of the target space, zero by default
    """
    A = qmatrix(A)
    cols = len(A[0]) if A else P.dim
    if cols != P.dim:
        raise DimensionError("map takes dimension {} but the set has dimension {}".format(cols, P.dim))
    target = len(A)
    shift = qvector(shift) if shift is not None else zeros(target)
    if len(shift) != target:
        raise DimensionError("shift of dimension {} for a map into dimension {}".format(len(shift), target))
    V = to_vpolyhedron(P)
    if V.is_empty:
        return VPolyhedron(target)
    image = VPolyhedron(target,
                        tuple(add(matvec(A, v), shift) for v in V.vertices),
                        tuple(matvec(A, r) for r in V.rays))
    return _canonical(image)


def set_sum(P: HPolyhedron, Q: HPolyhedron) -> HPolyhedron:
    """Minkowski sum of constraint-form sets

    The sum of an open set and any nonempty set is open; it is the interior of the sum of
    the closures.

    :raises RepresentationError: an operand mixes strict and non-strict constraints
    """
    if Openness.MIXED in (P.openness, Q.openness):
        raise RepresentationError("Minkowski sum of a set with mixed strictness")
    if is_empty(P) or is_empty(Q):
        return HPolyhedron.empty(P.dim)
    closed = v_to_h(minkowski_sum(to_vpolyhedron(P), to_vpolyhedron(Q)))
    if P.openness is Openness.OPEN or Q.openness is Openness.OPEN:
        return closed.as_open()
    return closed


def set_difference(P: HPolyhedron, Q: HPolyhedron) -> HPolyhedron:
    """P - Q = P + (-Q)"""
    return set_sum(P, Q.negated())


def set_includes(P: HPolyhedron, Q: HPolyhedron) -> bool:
    """Whether Q is a subset of P, for any strictness

    The closures are compared first; each strict constraint of P must then be out of reach
    of Q, i.e. Q never touches the hyperplane a . x = b.
    """
    if P.dim != Q.dim:
        raise DimensionError("cannot compare sets of dimensions {} and {}".format(P.dim, Q.dim))
    if is_empty(Q):
        return True
    if not includes(P.relaxed(), Q.relaxed()):
        return False
    strict_q = [(c.a, c.b) for c in Q.constraints if c.strict]
    closed_q = [(c.a, c.b) for c in Q.constraints if not c.strict]
    for con in P.constraints:
        if con.strict and strictly_feasible(Q.dim, strict_q, closed_q, [(con.a, con.b)]) is not None:
            return False
    return True


def same_set(P: HPolyhedron, Q: HPolyhedron) -> bool:
    """Exact set equality by mutual inclusion"""
    return set_includes(P, Q) and set_includes(Q, P)


def same_vset(P: VPolyhedron, Q: VPolyhedron) -> bool:
    return same_set(v_to_h(P), v_to_h(Q))


def sample_points(P: Union[HPolyhedron, VPolyhedron]) -> Sequence[QVector]:
    """Vertices, midpoints of vertex pairs and vertex-plus-ray points of the closure"""
    V = to_vpolyhedron(P)
    points = list(V.vertices)
    for i, u in enumerate(V.vertices):
        for v in V.vertices[i + 1:]:
            points.append(tuple((x + y) / 2 for x, y in zip(u, v)))
        for r in V.rays:
            points.append(add(u, r))
    return points
