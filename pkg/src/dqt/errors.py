"""Exception types shared across modules."""

from __future__ import annotations

from .numtheory import CapacityError

__all__ = [
    "CapacityError",
    "NonPhysicalStateError",
    "PromiseViolation",
    "RangeOverflowError",
    "RegionViolation",
]


class NonPhysicalStateError(ValueError):
    """Measurement of the zero vector."""


class PromiseViolation(ValueError):
    """Input breaks an algorithm's precondition (e.g. DJ constant/balanced promise)."""


class RegionViolation(ValueError):
    """Amplitudes outside the locally ordered region."""


class RangeOverflowError(ArithmeticError):
    """A computation needs a larger ordered range than the field provides.

    ``required_k`` is the least prime range bound that would suffice.
    """

    def __init__(self, message: str, required_k: int | None = None):
        super().__init__(message)
        self.required_k = required_k
