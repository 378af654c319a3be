"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class LrcError(Exception):
    """Base class for all errors raised by seplrc."""


# field construction and arithmetic
class NotPrime(LrcError, ValueError):
    pass


class Reducible(LrcError, ValueError):
    pass


class FieldTooLarge(LrcError, ValueError):
    pass


class InvalidModulus(LrcError, ValueError):
    pass


class DivisionByZero(LrcError, ZeroDivisionError):
    pass


class ZeroPolynomial(LrcError, ValueError):
    pass


# curves and spaces
class DegreesNotCoprime(LrcError, ValueError):
    pass


class DegreeTooSmall(LrcError, ValueError):
    pass


class InvalidSpace(LrcError, ValueError):
    pass


class UncertifiedSemigroup(LrcError):
    """A result needs H = <a, b> but the curve carries no certificate for it."""


class UncertifiedGonality(LrcError):
    """A strict gonality policy could not resolve gamma_t exactly."""


# codes
class NoSplitFibres(LrcError):
    pass


class FibreNotSplit(LrcError, ValueError):
    pass


class LengthMismatch(LrcError, ValueError):
    pass


class WorkCapExceeded(LrcError):
    def __init__(self, required: int, cap: int, what: str = "work"):
        super().__init__(f"{what} {required} exceeds cap {cap}")
        self.required = required
        self.cap = cap
        self.what = what


class Ambiguous(LrcError):
    """Erasure pattern admits several completions.

    ``certificate`` is a nonzero codeword supported inside the erased set.
    """

    def __init__(self, certificate):
        super().__init__("erased set contains the support of a nonzero codeword")
        self.certificate = certificate


class InconsistentSymbols(LrcError, ValueError):
    pass


# repair
class DuplicateAbscissa(LrcError, ValueError):
    pass


class NotApplicable(LrcError):
    pass


class LayoutInfeasible(LrcError, ValueError):
    pass


class ConfigError(LrcError, ValueError):
    pass


class MissingSymbols(LrcError, ValueError):
    """A symbol needed for local repair is itself erased."""
