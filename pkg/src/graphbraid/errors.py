"""Exception types shared across the package."""


class GraphParseError(ValueError):
    """Malformed graph or word input. ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class AlphabetError(ValueError):
    """Word or endomorphism uses symbols outside the expected alphabet."""


class ResourceError(RuntimeError):
    """A computation was stopped by a configured resource guard."""


class WordLengthError(ResourceError):
    def __init__(self, length, limit):
        self.length = length
        self.limit = limit
        super().__init__(
            f"intermediate word of length {length} exceeds the word limit {limit}"
        )


class CapabilityError(RuntimeError):
    """Input is larger than an exhaustive search is configured to handle."""
