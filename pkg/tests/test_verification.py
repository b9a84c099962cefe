import pytest
from hypothesis import given, settings, strategies as st

from ccx.errors import ConfigurationError, DimensionError, MalformedInputError, UnknownTheoremError
from ccx.oracle import make_rng
from ccx.utils import FM_BUDGET_ENV
from ccx.verification import (SUITES, CaseResult, Outcome, Verdict, available_theorems, get_suite, verify_all,
                              verify_theorem)
from ccx.verification.runner import with_unqualified_companion
from ccx.verification.suites import calculus_suites, normal_suites, separation_suites

EXPECTED = ['P2.1', 'P2.2', 'P2.3', 'P2.4', 'P2.5', 'P2.6', 'E2.3', 'P3.1', 'T3.2', 'T3.3', 'T3.4', 'L3.5',
            'T3.6', 'T3.7', 'L4.1', 'T4.2', 'L5.1', 'L5.2', 'L5.3', 'T5.4', 'T6.1', 'T6.2', 'T7.1', 'T7.2', 'T8.1']


def test_registry_order():
    assert available_theorems() == EXPECTED


@pytest.mark.parametrize('theorem_id', EXPECTED)
@pytest.mark.parametrize('dim', [1, 2])
def test_suites_hold(theorem_id, dim):
    verdict = verify_theorem(theorem_id, seed=42, count=3, dim=dim)
    assert verdict.instances_run == 3
    assert verdict.passes + verdict.precondition_unmet + verdict.violations == 3
    assert verdict.violations == 0, verdict.dumps
    assert verdict.passes >= 1, verdict.to_dict()


@pytest.mark.parametrize('theorem_id', ['T3.3', 'T5.4', 'L5.1'])
def test_suites_in_three_dimensions(theorem_id):
    assert verify_theorem(theorem_id, seed=7, count=2, dim=3).ok


def test_verdicts_are_reproducible():
    first = verify_theorem('T5.4', seed=123, count=4, dim=2).to_dict()
    second = verify_theorem('T5.4', seed=123, count=4, dim=2).to_dict()
    assert first == second
    assert set(first) == {'theorem_id', 'seed', 'dim', 'instances_run', 'passes', 'precondition_unmet',
                          'violations', 'inclusion_checks', 'violation_dumps'}


def test_unknown_theorem():
    with pytest.raises(UnknownTheoremError):
        get_suite('T9.9')
    with pytest.raises(UnknownTheoremError):
        verify_theorem('T9.9', seed=0, count=1, dim=2)


def test_dimension_range():
    assert get_suite('T6.1').max_dim == 3
    with pytest.raises(DimensionError):
        verify_theorem('T6.1', seed=0, count=1, dim=4)


def test_count_must_be_positive():
    with pytest.raises(MalformedInputError):
        verify_theorem('P2.1', seed=0, count=0, dim=2)


def test_verify_all_skips_unsupported_dimensions(monkeypatch):
    calls = []

    def fake(theorem_id, seed, count, dim):
        calls.append(theorem_id)
        return Verdict(theorem_id, seed, dim)

    monkeypatch.setattr('ccx.verification.runner.verify_theorem', fake)
    verify_all(seed=1, count=1, dim=4)
    assert 'T6.1' not in calls
    assert 'P2.1' in calls
    assert calls == [t for t in EXPECTED if SUITES[t].max_dim >= 4]


def test_verdict_bookkeeping():
    verdict = Verdict('X1.1', 0, 2)
    verdict.record(0, CaseResult.passed())
    verdict.record(1, CaseResult.unmet('core(S) nonempty'))
    verdict.record(2, CaseResult.check(False, reason='broken'))
    assert (verdict.passes, verdict.precondition_unmet, verdict.violations) == (1, 1, 1)
    assert not verdict.ok
    assert verdict.to_dict()['violation_dumps'] == [{'index': 2, 'instance': {'reason': 'broken'}}]
    assert CaseResult.check(True).outcome is Outcome.PASS


UNQUALIFIED_CASES = {
    'T5.4': normal_suites._intersection_case,
    'T6.1': calculus_suites._coderivative_sum_case,
    'T6.2': calculus_suites._subdifferential_sum_case,
    'T7.1': calculus_suites._coderivative_chain_case,
    'T7.2': calculus_suites._subdifferential_chain_case,
    'T8.1': calculus_suites._marginal_case,
}


@pytest.mark.parametrize('theorem_id', sorted(UNQUALIFIED_CASES))
@pytest.mark.parametrize('index', range(3))
def test_unconditional_inclusions_without_qualification(theorem_id, index):
    result = UNQUALIFIED_CASES[theorem_id](make_rng(5, index), 2, False)
    assert result.outcome is Outcome.PRECONDITION_UNMET, result.dump
    assert result.inclusion_checks > 0


@pytest.mark.parametrize('theorem_id', sorted(UNQUALIFIED_CASES))
def test_rules_count_their_inclusion_checks(theorem_id):
    verdict = verify_theorem(theorem_id, seed=11, count=2, dim=2)
    assert verdict.passes == 2, verdict.to_dict()
    assert verdict.inclusion_checks >= 4


def test_companion_outcomes():
    def unmet_then_pass(rng, dim, qualify):
        return CaseResult.passed(3) if qualify else CaseResult.unmet('core', 2)

    def broken_without_qualification(rng, dim, qualify):
        if qualify:
            raise AssertionError("the qualified instance must not run after a violation")
        return CaseResult.violated(reason='sum not included')

    combined = with_unqualified_companion(unmet_then_pass, make_rng(0), 2)
    assert combined.outcome is Outcome.PASS
    assert combined.inclusion_checks == 5
    failed = with_unqualified_companion(broken_without_qualification, make_rng(0), 2)
    assert failed.outcome is Outcome.VIOLATION
    assert failed.dump == {'reason': 'sum not included'}


@given(st.integers(min_value=0, max_value=2 ** 64 - 1), st.integers(min_value=1, max_value=3))
@settings(max_examples=30, deadline=None)
def test_extension_functional_is_nonzero_on_the_subspace(seed, dim):
    p, basis, values = separation_suites._extension_problem(make_rng(seed), dim, nonnegative=True, nonzero=True)
    assert any(values)


def test_separation_construction_runs_on_every_instance():
    verdict = verify_theorem('T3.6', seed=1, count=50, dim=2)
    assert verdict.precondition_unmet == 0
    assert verdict.passes == 50, verdict.to_dict()


def test_bad_budget_setting_is_not_a_violation(monkeypatch):
    monkeypatch.setenv(FM_BUDGET_ENV, 'abc')
    with pytest.raises(ConfigurationError):
        verify_theorem('T8.1', seed=0, count=1, dim=2)
