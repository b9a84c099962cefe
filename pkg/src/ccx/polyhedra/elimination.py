# -*- coding: utf-8 -*-
"""
Fourier-Motzkin elimination with LP redundancy pruning after every step.
"""
from __future__ import annotations

from typing import Iterable, Optional

from pymodaq.utils.logger import set_logger, get_module_name

from ..errors import DimensionError, FMBudgetExceeded
from .queries import is_empty, remove_redundant
from .sets import Constraint, HPolyhedron

logger = set_logger(get_module_name(__file__))


def _default_budget() -> int:
    from .. import config
    from ..utils import fm_budget
    return fm_budget(config)


def eliminate_variables(P: HPolyhedron, drop: Iterable[int], max_constraints: Optional[int] = None) -> HPolyhedron:
    """Projection of P onto the coordinates not listed in drop

    The next variable eliminated is the one minimizing the number of generated pairs,
    ties broken by smallest index. A combination is strict when one of its parents is.

    :param P: the set to project
    :type P: HPolyhedron
    :param drop: indices of the coordinates to eliminate
    :param max_constraints: cap on the constraints produced by one step, read from the
        configuration (or the CCX_MAX_FM_CONSTRAINTS environment variable) when None
    :raises DimensionError: an index is out of range
    :raises FMBudgetExceeded: a step produced more constraints than the cap
    :return: the projected set, in dimension ``P.dim - len(set(drop))``
    """
    drop = sorted(set(drop))
    for k in drop:
        if not 0 <= k < P.dim:
            raise DimensionError("cannot eliminate coordinate {} of a set of dimension {}".format(k, P.dim))
    limit = max_constraints if max_constraints is not None else _default_budget()
    keep = [k for k in range(P.dim) if k not in drop]
    if is_empty(P):
        return HPolyhedron.empty(len(keep))

    current = remove_redundant(P)
    remaining = list(drop)
    while remaining:
        def pairs(k):
            pos = sum(1 for c in current.constraints if c.a[k] > 0)
            neg = sum(1 for c in current.constraints if c.a[k] < 0)
            return pos * neg

        k = min(remaining, key=lambda j: (pairs(j), j))
        positive = [c for c in current.constraints if c.a[k] > 0]
        negative = [c for c in current.constraints if c.a[k] < 0]
        combined = [c for c in current.constraints if c.a[k] == 0]
        for p in positive:
            for n in negative:
                lam_p, lam_n = -n.a[k], p.a[k]
                a = tuple(lam_p * x + lam_n * y for x, y in zip(p.a, n.a))
                combined.append(Constraint(a, lam_p * p.b + lam_n * n.b, p.strict or n.strict))
        if len(combined) > limit:
            raise FMBudgetExceeded(len(combined), limit)
        logger.debug("eliminated coordinate {}: {} constraints before pruning".format(k, len(combined)))
        current = remove_redundant(HPolyhedron(P.dim, tuple(combined)))
        remaining.remove(k)

    projected = tuple(Constraint(tuple(c.a[k] for k in keep), c.b, c.strict) for c in current.constraints)
    return HPolyhedron(len(keep), projected)
