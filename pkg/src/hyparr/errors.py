"""Exception hierarchy shared by every module."""


class ArrangementError(Exception):
    pass


class InvalidSpec(ArrangementError, ValueError):
    pass


class DuplicateHyperplane(ArrangementError, ValueError):
    pass


class IndexOutOfRange(ArrangementError, IndexError):
    pass


class ParseError(ArrangementError, ValueError):
    pass


class BudgetExceeded(ArrangementError):
    pass


class DimensionTooLarge(BudgetExceeded):
    pass


class DuplicateAbscissa(ArrangementError, ValueError):
    pass


class ZeroPolynomial(ArrangementError, ValueError):
    pass


class NonIntegerCoefficients(ArrangementError, ValueError):
    pass


class BaseNotFound(ArrangementError, ValueError):
    pass


class InconsistentLabel(ArrangementError):
    pass


class NotInBaseChamber(ArrangementError, ValueError):
    pass


class CrossCheckFailed(ArrangementError):
    """Two independent computations of the same quantity disagreed."""
