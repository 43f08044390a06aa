"""Exception types shared across the package."""

from __future__ import annotations


class ParseError(ValueError):
    """Raised for malformed expression or file input.

    ``position`` is a 0-based character offset into the parsed text when the
    error comes from the expression parser, or None for file-level problems.
    """

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class RingMismatchError(ValueError):
    """Operands live in different polynomial rings."""


class NotHomogeneousError(ValueError):
    """A homogeneous polynomial was required."""


class PointNotOnVarietyError(ValueError):
    """Some generator does not vanish at the supplied point."""


class NotSmoothError(ValueError):
    """The supplied point is not a smooth point of the variety."""


class NotInIdealError(ValueError):
    """A polynomial required to be an ideal member is not one."""


class ImproperIdealError(ValueError):
    """The ideal contains a nonzero constant (unit)."""


class CertificateMismatchError(ValueError):
    """Certificate input hash does not match the supplied data."""


class BuchbergerTimeout(TimeoutError):
    """A basis computation exceeded its deadline."""
