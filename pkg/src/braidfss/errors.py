"""Exception types shared across the package."""


class BraidError(Exception):
    """Base class for all errors raised by braidfss."""


class ParseError(BraidError, ValueError):
    """Malformed input text. Carries the 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)


class ValidationError(BraidError, ValueError):
    """A structurally well-formed object violates a mathematical invariant."""
