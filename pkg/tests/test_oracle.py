from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ccx.arith import rank
from ccx.calculus import PolyhedralFunction, shared_core_point
from ccx.errors import BudgetExceeded, RepresentationError
from ccx.lp import in_convex_hull
from ccx.oracle import (InstanceKind, InstanceSpec, check_core_definitional, check_subgradient_definitional,
                        enumerate_vertices_bruteforce, generate_instance, make_rng, random_int,
                        random_matrix, random_set, random_sublinear, random_vector)
from ccx.polyhedra import HPolyhedron, Openness, h_to_v


seeds = st.integers(min_value=0, max_value=2 ** 64 - 1)


@given(seeds, st.integers(min_value=0, max_value=1000))
@settings(max_examples=25, deadline=None)
def test_streams_are_reproducible(seed, index):
    first = [random_int(make_rng(seed, index), -10, 10) for _ in range(5)]
    second = [random_int(make_rng(seed, index), -10, 10) for _ in range(5)]
    assert first == second


def test_seed_out_of_range():
    with pytest.raises(ValueError):
        make_rng(-1)
    with pytest.raises(ValueError):
        make_rng(2 ** 64)


def test_spec_budgets():
    with pytest.raises(BudgetExceeded):
        InstanceSpec(dim=5)
    with pytest.raises(BudgetExceeded):
        InstanceSpec(dim=2, constraint_budget=0)
    with pytest.raises(BudgetExceeded):
        InstanceSpec(dim=2, coef_bound=100)
    assert InstanceSpec(margin='1/3').margin == Fraction(1, 3)


@pytest.mark.parametrize('dim', [1, 2, 3, 4])
@pytest.mark.parametrize('seed', [0, 7, 2024])
def test_random_set_contains_center_in_core(dim, seed):
    rng = make_rng(seed)
    center = tuple(Fraction(k, 3) for k in range(dim))
    S = random_set(rng, InstanceSpec(dim=dim), center=center)
    assert S.is_closed
    assert check_core_definitional(S, center)


@pytest.mark.parametrize('kind', list(InstanceKind))
def test_generate_instance_is_deterministic(kind):
    spec = InstanceSpec(dim=2, kind=kind, set_count=3)
    assert generate_instance(spec, 11, 3) == generate_instance(spec, 11, 3)


def test_shared_core_instance():
    center, sets = generate_instance(InstanceSpec(dim=3, kind=InstanceKind.MULTI_SET_SHARED_CORE, set_count=3), 5)
    assert len(sets) == 3
    assert all(check_core_definitional(S, center) for S in sets)


@pytest.mark.parametrize('set_count', [1, 2, 3])
def test_unqualified_family_keeps_the_center(set_count):
    spec = InstanceSpec(dim=2, kind=InstanceKind.MULTI_SET_SHARED_CORE, set_count=set_count, qualified=False)
    center, sets = generate_instance(spec, 3, 1)
    assert len(sets) == set_count
    assert all(S.contains(center) for S in sets)
    assert shared_core_point(list(sets)) is None


def test_map_instance_budget():
    with pytest.raises(BudgetExceeded):
        generate_instance(InstanceSpec(dim=4, kind=InstanceKind.MAP), 0)


def test_random_sublinear_nonnegative():
    rng = make_rng(3)
    for _ in range(10):
        p = random_sublinear(rng, 3, 4, nonnegative=True)
        assert in_convex_hull((0, 0, 0), p.coeff_rows)


def test_random_matrix_full_rank():
    rng = make_rng(8)
    for rows, cols in [(1, 3), (2, 3), (3, 3), (3, 2)]:
        assert rank(random_matrix(rng, rows, cols, 2, full_rank=True)) == min(rows, cols)


def test_random_vector_nonzero():
    rng = make_rng(1)
    assert all(any(random_vector(rng, 2, 1, nonzero=True)) for _ in range(20))


def test_core_definitional(square):
    assert check_core_definitional(square, (0, 0))
    assert not check_core_definitional(square, (1, 0))
    assert not check_core_definitional(square, (2, 0))
    segment = HPolyhedron.box((0, 0), (1, 0))
    assert not check_core_definitional(segment, (Fraction(1, 2), 0))


def test_subgradient_definitional():
    phi = PolyhedralFunction.max_affine([((1,), 0), ((-1,), 0)])
    assert check_subgradient_definitional(phi, (0,), (-1,))
    assert check_subgradient_definitional(phi, (3,), (1,))
    assert not check_subgradient_definitional(phi, (3,), (0,))


def test_bruteforce_vertices(triangle):
    assert enumerate_vertices_bruteforce(triangle) == sorted(h_to_v(triangle).vertices)


def test_bruteforce_limits(square):
    with pytest.raises(BudgetExceeded):
        enumerate_vertices_bruteforce(square, max_dim=1)
    with pytest.raises(RepresentationError):
        enumerate_vertices_bruteforce(HPolyhedron.box((0,), (1,), Openness.OPEN))
    halfplane = HPolyhedron.from_rows(2, [((1, 0), 0)])
    assert enumerate_vertices_bruteforce(halfplane) == []
