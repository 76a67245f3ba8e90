"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class DegBernError(Exception):
    """Base class for all errors raised by degbern."""


class NegativeIndexError(DegBernError, ValueError):
    """An index (n, k, r, order) that must be nonnegative was negative."""


class ArityMismatchError(DegBernError, ValueError):
    pass


class NonUnitLeadingCoefficientError(DegBernError, ZeroDivisionError):
    """The first nonzero coefficient of a series denominator is not a nonzero rational."""


class ValuationMismatchError(DegBernError, ValueError):
    """The numerator vanishes to lower order than the denominator."""


class NonNilpotentInnerError(DegBernError, ValueError):
    """Composition was attempted with an inner series having a nonzero constant term."""


class InternalIdentityFailure(DegBernError, AssertionError):
    """Two routes that must agree by construction disagreed.

    Always signals an implementation bug, never a user error.
    """


class UnknownIdentityError(DegBernError, KeyError):
    pass


def check_nonnegative(**indices: int) -> None:
    for name, value in indices.items():
        if value < 0:
            raise NegativeIndexError(f"{name} must be nonnegative, got {value}")
