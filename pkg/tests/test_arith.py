from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ccx.arith import (as_rational, format_rational, kernel, matvec, parse_rational, primitive, qmatrix, rank,
                       selector, solve_linear_system, transpose, zeros)

small_ints = st.integers(min_value=-5, max_value=5)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r)))


@pytest.mark.parametrize('text, value', [('7', Fraction(7)), ('-3', Fraction(-3)), ('2/3', Fraction(2, 3)),
                                         ('-5/4', Fraction(-5, 4)), ('6/4', Fraction(3, 2)), (' 1 / 2 ', Fraction(1, 2))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize('text', ['1.5', '1/0', '', 'a/b', '--1', '1e3'])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_rational_is_canonical():
    assert format_rational(Fraction(6, 4)) == '3/2'
    assert format_rational(Fraction(-8, 4)) == '-2'
    assert format_rational(Fraction(0)) == '0'


@given(st.integers(-10 ** 6, 10 ** 6), st.integers(1, 10 ** 6))
def test_format_parse_identity(p, q):
    value = Fraction(p, q)
    text = format_rational(value)
    assert parse_rational(text) == value
    assert format_rational(parse_rational(text)) == text


def test_as_rational_refuses_floats():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)
    assert as_rational('3/9') == Fraction(1, 3)


def test_primitive():
    assert primitive((Fraction(2, 3), Fraction(4, 3))) == (1, 2)
    assert primitive((0, -6, 9)) == (0, -2, 3)
    assert primitive(zeros(2)) == zeros(2)


@given(matrices())
def test_rank_of_transpose(rows):
    A = qmatrix(rows)
    assert rank(A) == rank(transpose(A))


@given(matrices(), st.data())
def test_solve_consistent_system(rows, data):
    A = qmatrix(rows)
    x0 = tuple(Fraction(v) for v in data.draw(st.lists(small_ints, min_size=len(A[0]), max_size=len(A[0]))))
    b = matvec(A, x0)
    x = solve_linear_system(A, b)
    assert x is not None
    assert matvec(A, x) == b


def test_solve_inconsistent_system():
    A = qmatrix([[1, 1], [2, 2]])
    assert solve_linear_system(A, (Fraction(1), Fraction(3))) is None


@given(matrices())
def test_kernel(rows):
    A = qmatrix(rows)
    basis = kernel(A)
    assert len(basis) == len(A[0]) - rank(A)
    for v in basis:
        assert matvec(A, v) == zeros(len(A))


def test_selector():
    M = selector(3, [2, 0], [1, -1])
    assert matvec(M, (Fraction(1), Fraction(2), Fraction(3))) == (3, -1)
