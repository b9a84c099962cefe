# -*- coding: utf-8 -*-
"""
Exact scalars, vectors and matrices over the rationals.

Scalars are :class:`fractions.Fraction` instances, which are kept in lowest terms with a
positive denominator, so equality is a field-wise comparison. Vectors are tuples of
fractions and matrices tuples of row vectors; both are immutable.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Optional, Sequence, Tuple, Union

from .errors import DimensionError

Rational = Fraction
QVector = Tuple[Fraction, ...]
QMatrix = Tuple[QVector, ...]

RationalLike = Union[Fraction, int, str]

_RATIONAL_TEXT = re.compile(r'^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$')


def parse_rational(text: str) -> Fraction:
    """Parse the text form of a rational: ``"7"``, ``"-3"``, ``"2/3"`` or ``"-5/4"``

    :param text: the text to parse
    :type text: str
    :raises ValueError: not a decimal integer or ``p/q``, or ``q = 0``
    :return: the parsed value
    :rtype: Fraction
    """
    match = _RATIONAL_TEXT.match(text)
    if match is None:
        raise ValueError("{!r} is not a rational of the form p or p/q".format(text))
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ValueError("{!r} has a zero denominator".format(text))
    return Fraction(int(numerator), int(denominator) if denominator is not None else 1)


def format_rational(value: Fraction) -> str:
    """Exact text form, ``p`` for integers and ``p/q`` otherwise"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{}/{}".format(value.numerator, value.denominator)


def as_rational(value: RationalLike) -> Fraction:
    """Convert an int, a Fraction or a rational text into a Fraction

    Floats are refused, they would smuggle binary rounding into exact computations.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError("refusing inexact value {!r}".format(value))
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError("cannot convert {!r} to a rational".format(value))


def qvector(values: Iterable[RationalLike]) -> QVector:
    return tuple(as_rational(v) for v in values)


def qmatrix(rows: Iterable[Iterable[RationalLike]]) -> QMatrix:
    matrix = tuple(qvector(row) for row in rows)
    if matrix and len({len(row) for row in matrix}) > 1:
        raise DimensionError("rows of a matrix must share their length")
    return matrix


def zeros(dim: int) -> QVector:
    return (Fraction(0),) * dim


def unit(dim: int, index: int) -> QVector:
    return tuple(Fraction(1) if k == index else Fraction(0) for k in range(dim))


def is_zero(v: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in v)


def _check_same_dim(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise DimensionError("vectors of dimensions {} and {} are incompatible".format(len(u), len(v)))


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    _check_same_dim(u, v)
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> QVector:
    _check_same_dim(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> QVector:
    _check_same_dim(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(v: Sequence[Fraction], factor: RationalLike) -> QVector:
    factor = as_rational(factor)
    return tuple(factor * a for a in v)


def neg(v: Sequence[Fraction]) -> QVector:
    return tuple(-a for a in v)


def combine(weights: Sequence[Fraction], vectors: Sequence[Sequence[Fraction]], dim: int) -> QVector:
    """Linear combination sum_k weights[k] * vectors[k] in dimension dim"""
    total = [Fraction(0)] * dim
    for w, v in zip(weights, vectors):
        if w == 0:
            continue
        for k in range(dim):
            total[k] += w * v[k]
    return tuple(total)


def primitive(v: Sequence[Fraction]) -> QVector:
    """Positive rescaling of v to coprime integer entries (the zero vector is returned as is)"""
    if is_zero(v):
        return tuple(Fraction(0) for _ in v)
    common_den = reduce(lambda acc, x: acc * x.denominator // gcd(acc, x.denominator), v, 1)
    ints = [int(x * common_den) for x in v]
    common_num = reduce(gcd, (abs(i) for i in ints if i != 0))
    return tuple(Fraction(i // common_num) for i in ints)


def transpose(A: QMatrix, col_count: Optional[int] = None) -> QMatrix:
    if not A:
        return tuple(() for _ in range(col_count or 0))
    return tuple(tuple(row[j] for row in A) for j in range(len(A[0])))


def matvec(A: QMatrix, x: Sequence[Fraction]) -> QVector:
    return tuple(dot(row, x) for row in A)


def identity(dim: int) -> QMatrix:
    return tuple(unit(dim, k) for k in range(dim))


def selector(total: int, indices: Sequence[int], signs: Optional[Sequence[int]] = None) -> QMatrix:
    """Matrix whose row i picks coordinate indices[i] of a vector of dimension total, times signs[i]"""
    signs = signs if signs is not None else [1] * len(indices)
    return tuple(scale(unit(total, k), s) for k, s in zip(indices, signs))


def _integer_rows(A: Sequence[Sequence[Fraction]], b: Optional[Sequence[Fraction]]):
    """Row-wise scaling of [A | b] to integers, which leaves the solution set unchanged"""
    rows = []
    for i, row in enumerate(A):
        full = list(row) + ([b[i]] if b is not None else [])
        den = reduce(lambda acc, x: acc * x.denominator // gcd(acc, x.denominator), full, 1)
        rows.append([int(x * den) for x in full])
    return rows


def _bareiss(M, ncols):
    """In-place fraction-free elimination of the first ncols columns of the integer matrix M

    Pivot search is column-major: the first nonzero entry at or below the current pivot row.
    Every entry stays an integer minor of the input, so divisions by the previous pivot
    are exact.

    :return: the pivot columns
    """
    nrows = len(M)
    width = len(M[0]) if M else 0
    pivots = []
    previous = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if M[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            M[r], M[p] = M[p], M[r]
        pivot = M[r][c]
        for i in range(r + 1, nrows):
            factor = M[i][c]
            for j in range(c + 1, width):
                M[i][j] = (pivot * M[i][j] - factor * M[r][j]) // previous
            M[i][c] = 0
        # rows above the pivot row keep their entries, they are never read again
        previous = pivot
        pivots.append(c)
        r += 1
    return pivots


def solve_linear_system(A: QMatrix, b: Sequence[Fraction]) -> Optional[QVector]:
    """Some exact solution of A x = b, or None when the system is inconsistent

    Free variables are set to zero, which makes the answer deterministic.

    :param A: the matrix
    :type A: QMatrix
    :param b: right-hand side, of dimension ``len(A)``
    :raises DimensionError: len(b) differs from the row count of A
    """
    if len(A) != len(b):
        raise DimensionError("matrix has {} rows but the right-hand side has {} entries".format(len(A), len(b)))
    ncols = len(A[0]) if A else 0
    if not A:
        return zeros(ncols)
    M = _integer_rows(A, b)
    pivots = _bareiss(M, ncols)
    rank_ = len(pivots)
    if any(M[i][ncols] != 0 for i in range(rank_, len(M))):
        return None
    x = [Fraction(0)] * ncols
    for r in range(rank_ - 1, -1, -1):
        c = pivots[r]
        rest = sum(M[r][j] * x[j] for j in range(c + 1, ncols))
        x[c] = (Fraction(M[r][ncols]) - rest) / M[r][c]
    return tuple(x)


def rank(A: QMatrix) -> int:
    """Exact rank over the rationals"""
    if not A or not A[0]:
        return 0
    M = _integer_rows(A, None)
    return len(_bareiss(M, len(A[0])))


def kernel(A: QMatrix, col_count: Optional[int] = None) -> Tuple[QVector, ...]:
    """Basis of the null space {x : A x = 0}, one vector per free column

    :param col_count: number of columns, needed when A has no rows
    """
    ncols = len(A[0]) if A else (col_count or 0)
    if not A:
        return identity(ncols)
    M = _integer_rows(A, None)
    pivots = _bareiss(M, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            rest = sum(M[r][j] * x[j] for j in range(c + 1, ncols))
            x[c] = -Fraction(rest) / M[r][c]
        basis.append(tuple(x))
    return tuple(basis)
