class TheoremViolation(AssertionError):
    """A guarantee that the underlying theorems provide did not hold.

    Raising this always indicates a bug in this package (or in the
    mathematics), never bad user input.
    """


class FormatError(ValueError):
    """Malformed input file; ``lineno`` is 1-based, or None if not line-specific."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
