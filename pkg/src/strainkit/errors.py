"""Exception types shared across the package."""

from __future__ import annotations


class StrainkitError(Exception):
    """Base class for all package-specific errors."""


class CompatibilityError(StrainkitError):
    """A mathematical precondition failed; carries the exact residual.

    Raised when an integrability condition does not hold (a non-closed field
    handed to the homotopy antiderivative, a strain violating the
    compatibility equations, ...).  ``residual`` is the offending exact field
    so callers can report it verbatim.
    """

    def __init__(self, message: str, residual=None):
        super().__init__(message)
        self.residual = residual


class SingularMetricError(StrainkitError):
    """The metric is not invertible at the requested point."""


class SingularBlockError(StrainkitError):
    """A block selected for cancellation is not invertible."""

    def __init__(self, message: str, rank: int, size: int):
        super().__init__(message)
        self.rank = rank
        self.size = size


class FieldFormatError(StrainkitError):
    """A serialized field document could not be parsed."""
