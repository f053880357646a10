"""Exception hierarchy shared by the library and the CLI."""


class PlatcoverError(Exception):
    """Base class for all errors raised by platcover."""


class BraidParseError(PlatcoverError, ValueError):
    """Malformed braid word text.

    ``position`` is the 0-based index of the offending token, when known.
    """

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class ZeroTokenError(BraidParseError):
    pass


class IndexRangeError(BraidParseError):
    pass


class OddStrandCountError(BraidParseError):
    pass


class NonIntegerTokenError(BraidParseError):
    pass


class StrandMismatchError(PlatcoverError, ValueError):
    """Two braid words on different numbers of strands were combined."""


class PreconditionError(PlatcoverError, ValueError):
    """An operation was called on input violating its precondition."""


class VerificationError(PlatcoverError, RuntimeError):
    """An internal consistency check failed; this indicates a bug."""
