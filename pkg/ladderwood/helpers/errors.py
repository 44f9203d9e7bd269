"""
Exception hierarchy for ladderwood.

Every error derives from ``LadderwoodError`` and from the builtin that best describes it, so callers may
catch either one.
"""
from typing import Optional, Tuple


Span = Tuple[int, int]


class LadderwoodError(Exception):
    pass


class DivisionByZero(LadderwoodError, ZeroDivisionError):
    pass


class InvalidArgument(LadderwoodError, ValueError):
    pass


class UnsupportedExponent(LadderwoodError, ValueError):
    """ Raised when an exponent is not an affine form in the ladder operators. """
    pass


class NonAffineExponent(UnsupportedExponent):
    def __init__(self, message: str, span: Optional[Span] = None):
        super().__init__(message)
        self.span = span


class SpaceMismatch(LadderwoodError, ValueError):
    pass


class UnboundIndeterminate(LadderwoodError, ValueError):
    """ Raised when a numeric value is needed for an expression that still depends on xi. """
    pass


class ParseError(LadderwoodError, ValueError):
    def __init__(self, message: str, token: str, span: Span):
        super().__init__(f'{message} at {span[0]}:{span[1]} (near {token!r})')
        self.token = token
        self.span = span


class VerificationFailure(LadderwoodError, AssertionError):
    pass
