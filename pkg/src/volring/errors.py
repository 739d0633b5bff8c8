"""Exception hierarchy shared by all volring modules."""


class VolringError(Exception):
    """Base class for every error raised by this package."""


class DomainError(VolringError, ValueError):
    """An argument lies outside the domain of the operation."""


class UnsupportedError(VolringError, ValueError):
    """The requested family/rank or feature is not supported."""


class UnboundedError(VolringError):
    """A polyhedron expected to be bounded has a recession direction."""

    def __init__(self, message, direction=None):
        super().__init__(message)
        self.direction = direction


class CapExceededError(VolringError):
    """An enumeration would exceed its configured cap."""

    def __init__(self, message, cap):
        super().__init__(message)
        self.cap = cap


class CertificationError(VolringError):
    """An internal certificate (interpolation, hull, ...) did not verify."""


class PresentationMismatch(VolringError):
    """A computed presentation disagrees with an independent invariant.

    This signals a bug rather than bad input.
    """
