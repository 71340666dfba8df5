"""Exception types raised across the package."""


class PaleyError(ValueError):
    """Base class for all domain errors."""


class NotAnOddPrimePower(PaleyError):
    pass


class SizeLimitExceeded(PaleyError):
    pass


class DivisionByZero(PaleyError, ZeroDivisionError):
    pass


class NotAUnit(PaleyError):
    """Squareness was asked of the zero element."""


class DIsASquare(PaleyError):
    pass


class ZeroSlope(PaleyError):
    pass


class SelfLoop(PaleyError):
    pass


class KindMismatch(PaleyError):
    pass


class NotOnCircle(PaleyError):
    """Element does not have norm 1."""


class PoleAtOne(PaleyError):
    pass


class DegenerateGamma(PaleyError):
    pass


class NotAnArc(PaleyError):
    pass


class NotAClique(PaleyError):
    pass


class ParseError(PaleyError):
    pass


class BudgetExhausted(RuntimeError):
    """The census search ran past its wall-clock budget."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
