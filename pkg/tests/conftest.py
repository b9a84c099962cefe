from fractions import Fraction

import pytest

from ccx.polyhedra import Constraint, HPolyhedron


def Q(text) -> Fraction:
    return Fraction(text)


@pytest.fixture
def square():
    """[-1, 1]^2"""
    return HPolyhedron.box((-1, -1), (1, 1))


@pytest.fixture
def unit_square():
    return HPolyhedron.box((0, 0), (1, 1))


@pytest.fixture
def triangle():
    """conv{(0, 0), (1, 0), (0, 1)}"""
    return HPolyhedron(2, (Constraint((-1, 0), 0), Constraint((0, -1), 0), Constraint((1, 1), 1)))
