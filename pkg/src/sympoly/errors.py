"""Exception hierarchy.

Every domain error derives from :class:`SympolyError` so the CLI can map
them to exit code 1 with a structured payload.
"""


class SympolyError(Exception):
    """Base class for all domain errors raised by sympoly."""


class InvalidGraph(SympolyError, ValueError):
    pass


class DisconnectedGraph(SympolyError):
    pass


class CycleBudgetExceeded(SympolyError):
    pass


class SizeBudgetExceeded(SympolyError):
    pass


class DivisionByZeroPolynomial(SympolyError, ZeroDivisionError):
    pass


class SingularSystem(SympolyError):
    pass


class PoleAtOrigin(SympolyError):
    pass


class DuplicatePoints(SympolyError, ValueError):
    pass


class NotAFacet(SympolyError, ValueError):
    pass


class NotAFacetWord(SympolyError, ValueError):
    pass


class InvalidBadWordSet(SympolyError, ValueError):
    pass


class NonDivisible(SympolyError):
    pass


class NonIntegralResult(SympolyError):
    pass


class LoopsUnsupported(SympolyError, ValueError):
    pass


class NonPalindromicHStar(SympolyError, AssertionError):
    """Raised when an h*-vector fails the reflexivity check; always a bug."""
