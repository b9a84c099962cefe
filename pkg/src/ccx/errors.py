# -*- coding: utf-8 -*-
"""
Exception hierarchy of the package.

Usage errors map to exit code 1 on the command line, domain errors to exit code 2 and an
exhausted Fourier-Motzkin budget to exit code 3.
"""


class CcxError(Exception):
    """Base class of every error raised by the package"""


class DimensionError(CcxError, ValueError):
    """Operands do not live in compatible spaces"""


class MalformedInputError(CcxError, ValueError):
    """A JSON document does not follow the expected layout

    :param path: JSON path of the offending value, for instance ``$.constraints[2].a[0]``
    :type path: str
    :param message: what is wrong with the value
    :type message: str
    """

    def __init__(self, path, message):
        super().__init__("{}: {}".format(path, message))
        self.path = path
        self.message = message


class ConfigurationError(MalformedInputError):
    """A setting read from the configuration file or the environment is unusable; the path
    names the setting"""


class RepresentationError(CcxError, ValueError):
    """The operation does not accept this representation (open set, mixed strictness...)"""


class UnknownTheoremError(CcxError, KeyError):
    """No verification suite is registered under this id"""


class DomainError(CcxError):
    """A mathematical precondition of the operation does not hold"""


class PreconditionUnmet(DomainError):
    """A qualification condition is not satisfied

    :param condition: short name of the condition, e.g. ``core(dom phi) & core(gph F)``
    :type condition: str
    """

    def __init__(self, condition, message=''):
        super().__init__(message or "qualification condition {} is not satisfied".format(condition))
        self.condition = condition


class DominationError(DomainError):
    """The functional to extend is not dominated by the sublinear function

    :param witness: a point of the subspace where the domination fails, or an improving ray
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InfiniteValueError(DomainError):
    """The function value at the point is not finite"""


class ImproperFunctionError(DomainError):
    """The function takes the value minus infinity somewhere"""


class NotOptimalError(DomainError):
    """The point is not a minimizer of the parametric problem"""


class EmptySetError(DomainError):
    """The set is empty while the operation needs a nonempty one"""


class BudgetExceeded(CcxError):
    """An oracle budget (dimension, number of constraints) is exceeded"""


class FMBudgetExceeded(BudgetExceeded):
    """A Fourier-Motzkin step produced more constraints than allowed

    :param count: number of constraints the step would have produced
    :type count: int
    :param limit: configured cap
    :type limit: int
    """

    def __init__(self, count, limit):
        super().__init__("Fourier-Motzkin produced {} constraints, more than the cap {}".format(count, limit))
        self.count = count
        self.limit = limit
