# -*- coding: utf-8 -*-
"""
Registry of theorem suites and the seeded runner producing verdicts.

A suite is a function ``check(rng, dim) -> CaseResult`` registered under a theorem id with
:func:`register`. The runner draws instance number k from ``make_rng(seed, k)`` so a verdict
only depends on (theorem id, seed, count, dim).
"""
from __future__ import annotations

import re
import traceback
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Callable, Dict, List, Optional

import numpy as np
from pymodaq.utils.logger import set_logger, get_module_name

from ..errors import (ConfigurationError, DimensionError, FMBudgetExceeded, MalformedInputError, PreconditionUnmet,
                      UnknownTheoremError)
from ..oracle import make_rng
from ..oracle.generators import MAX_DIM

logger = set_logger(get_module_name(__file__))


class Outcome(Enum):
    PASS = 'pass'
    PRECONDITION_UNMET = 'precondition-unmet'
    VIOLATION = 'violation'


@dataclass(frozen=True)
class CaseResult:
    """Outcome of one instance

    inclusion_checks counts the unconditional inclusions verified along the way, on
    qualified and unqualified instances alike.
    """
    outcome: Outcome
    dump: Optional[Dict[str, Any]] = None
    inclusion_checks: int = 0

    @classmethod
    def passed(cls, inclusion_checks: int = 0) -> 'CaseResult':
        return cls(Outcome.PASS, inclusion_checks=inclusion_checks)

    @classmethod
    def unmet(cls, condition: str, inclusion_checks: int = 0) -> 'CaseResult':
        return cls(Outcome.PRECONDITION_UNMET, {'condition': condition}, inclusion_checks)

    @classmethod
    def violated(cls, **dump) -> 'CaseResult':
        return cls(Outcome.VIOLATION, dump)

    @classmethod
    def check(cls, ok: bool, **dump) -> 'CaseResult':
        """Pass when ok, otherwise a violation carrying dump"""
        return cls.passed() if ok else cls.violated(**dump)


def with_unqualified_companion(check: Callable[[np.random.Generator, int, bool], CaseResult],
                               rng: np.random.Generator, dim: int) -> CaseResult:
    """Run check on an instance violating the qualification condition, then on a qualified one

    The first run can only pass its unconditional inclusions or report a violation; its
    precondition-unmet outcome is expected and only its inclusion count is kept.
    """
    loose = check(rng, dim, False)
    if loose.outcome is Outcome.VIOLATION:
        return loose
    result = check(rng, dim, True)
    return replace(result, inclusion_checks=result.inclusion_checks + loose.inclusion_checks)


@dataclass(frozen=True)
class Suite:
    theorem_id: str
    description: str
    check: Callable[[np.random.Generator, int], CaseResult]
    min_dim: int = 1
    max_dim: int = MAX_DIM


SUITES: Dict[str, Suite] = {}


def register(theorem_id: str, description: str = '', min_dim: int = 1, max_dim: int = MAX_DIM):
    """Decorator registering a suite function under theorem_id"""
    def decorator(func):
        if theorem_id in SUITES:
            logger.warning("theorem {} registered twice, keeping {}".format(theorem_id, func.__module__))
        SUITES[theorem_id] = Suite(theorem_id, description or (func.__doc__ or '').strip().splitlines()[0],
                                   func, min_dim, max_dim)
        return func
    return decorator


def _theorem_key(theorem_id: str):
    match = re.match(r'([A-Z]+)(\d+)\.(\d+)$', theorem_id)
    if match is None:
        return (1000, True, 0, theorem_id)
    # worked examples close their section
    return (int(match.group(2)), match.group(1) == 'E', int(match.group(3)), match.group(1))


def available_theorems() -> List[str]:
    """Registered ids in section order (P2.1, P2.2, ..., E2.3, P3.1, ...)"""
    from . import suites  # noqa: F401 (imports register every suite module)
    return sorted(SUITES, key=_theorem_key)


def get_suite(theorem_id: str) -> Suite:
    available_theorems()
    try:
        return SUITES[theorem_id]
    except KeyError:
        raise UnknownTheoremError("unknown theorem id {!r}".format(theorem_id))


@dataclass
class Verdict:
    """Outcome counts of one suite run; passes + precondition_unmet + violations = instances_run"""
    theorem_id: str
    seed: int
    dim: int
    instances_run: int = 0
    passes: int = 0
    precondition_unmet: int = 0
    violations: int = 0
    inclusion_checks: int = 0
    dumps: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def record(self, index: int, result: CaseResult):
        self.instances_run += 1
        self.inclusion_checks += result.inclusion_checks
        if result.outcome is Outcome.PASS:
            self.passes += 1
        elif result.outcome is Outcome.PRECONDITION_UNMET:
            self.precondition_unmet += 1
            logger.warning("{} instance {}: precondition {} unmet".format(
                self.theorem_id, index, (result.dump or {}).get('condition')))
        else:
            self.violations += 1
            self.dumps.append({'index': index, 'instance': result.dump or {}})
            logger.error("{} instance {}: violation".format(self.theorem_id, index))

    def to_dict(self) -> Dict[str, Any]:
        return {'theorem_id': self.theorem_id,
                'seed': self.seed,
                'dim': self.dim,
                'instances_run': self.instances_run,
                'passes': self.passes,
                'precondition_unmet': self.precondition_unmet,
                'violations': self.violations,
                'inclusion_checks': self.inclusion_checks,
                'violation_dumps': self.dumps}


def run_case(suite: Suite, seed: int, index: int, dim: int) -> CaseResult:
    rng = make_rng(seed, index)
    try:
        return suite.check(rng, dim)
    except PreconditionUnmet as e:
        return CaseResult.unmet(e.condition)
    except (FMBudgetExceeded, ConfigurationError):
        raise
    except Exception as e:
        logger.debug(traceback.format_exc())
        return CaseResult.violated(error="{}: {}".format(type(e).__name__, e))


def verify_theorem(theorem_id: str, seed: int, count: int, dim: int) -> Verdict:
    """Run count seeded instances of one suite, sequentially in index order

    :param theorem_id: registered id such as ``T5.4``
    :param seed: 64-bit unsigned seed
    :param count: number of instances, at least 1
    :param dim: ambient dimension of the instances
    :raises UnknownTheoremError: the id is not registered
    :raises FMBudgetExceeded: an elimination outgrew its budget
    :raises ConfigurationError: the elimination budget setting is unusable
    """
    suite = get_suite(theorem_id)
    if count < 1:
        raise MalformedInputError('--count', "at least one instance is needed")
    if not suite.min_dim <= dim <= suite.max_dim:
        raise DimensionError("{} runs in dimensions {}..{}, got {}".format(
            theorem_id, suite.min_dim, suite.max_dim, dim))
    verdict = Verdict(theorem_id, seed, dim)
    for index in range(count):
        verdict.record(index, run_case(suite, seed, index, dim))
    logger.info("{}: {}/{} passes, {} unmet, {} violations".format(
        theorem_id, verdict.passes, verdict.instances_run, verdict.precondition_unmet, verdict.violations))
    return verdict


def verify_all(seed: int, count: int, dim: int) -> List[Verdict]:
    """Every suite that supports dim"""
    verdicts = []
    for theorem_id in available_theorems():
        suite = SUITES[theorem_id]
        if suite.min_dim <= dim <= suite.max_dim:
            verdicts.append(verify_theorem(theorem_id, seed, count, dim))
        else:
            logger.info("{} skipped in dimension {}".format(theorem_id, dim))
    return verdicts
