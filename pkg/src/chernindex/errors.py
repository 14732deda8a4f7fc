"""Exception types raised by chernindex."""


class ChernIndexError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatchError(ChernIndexError, ValueError):
    """Two classes truncated at different dimensions were combined."""


class DomainError(ChernIndexError, ValueError):
    """An operation was applied outside its domain (a computation rejection)."""


class ValidationError(ChernIndexError, ValueError):
    """User supplied data that does not describe a valid object."""


class ParseError(ValidationError):
    """Syntax error in a variety or bundle expression.

    ``offset`` is a byte offset into the UTF-8 encoded input and ``expected``
    the set of tokens that would have been accepted there.
    """

    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)
