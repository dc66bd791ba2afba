"""Exception types shared across the package."""

from __future__ import annotations


class BoxdimError(Exception):
    """Base class for all package errors."""


class ParseError(BoxdimError, ValueError):
    """Malformed input file. ``line`` is 1-based, or None when not line-specific."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapabilityError(BoxdimError):
    """A size cap or search bound was exceeded; the input itself is fine."""

    def __init__(self, message: str, fallback=None):
        super().__init__(message)
        self.fallback = fallback


class DimensionExceeded(CapabilityError):
    pass


class InvalidRepresentation(BoxdimError, ValueError):
    pass
