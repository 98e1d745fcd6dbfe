"""
Error taxonomy shared by every module.

The CLI maps these to its exit-code contract:
    DomainError / CapacityError -> 1
    VerificationError           -> 2
"""


class FanoError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(FanoError, ValueError):
    """An argument lies outside the domain of the requested operation."""


class CapacityError(DomainError):
    """A request exceeds a documented capacity cap."""


class IntegralityError(FanoError, ArithmeticError):
    """An exact result that must be an integer did not reduce to one."""


class VerificationError(FanoError, AssertionError):
    """A cross-check or identity failed."""

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        self.detail = detail
        message = f"{invariant}: {detail}" if detail else invariant
        super().__init__(message)
