"""Exception types shared across the package."""


class RvckitError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(RvckitError, ValueError):
    """An input value violates a documented precondition."""


class FormatError(RvckitError, ValueError):
    """A text input cannot be parsed.

    When the offending line is known, ``line`` holds its 1-based number
    and the message starts with ``line <n>:``.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SizeLimitError(RvckitError):
    """The instance exceeds the documented exact-computation limits."""


class InconsistencyError(RvckitError):
    """An internal invariant failed; this signals a bug, not bad input."""
