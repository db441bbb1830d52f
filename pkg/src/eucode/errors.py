"""Exception hierarchy.

Class names double as the error names reported by the command line tool, so
they are kept short and match the failure they describe.
"""


class CodeError(Exception):
    """Base class for every error raised by :mod:`eucode`."""


class ValidationError(CodeError, ValueError):
    """Parameters violate the constraints of their scheme."""


class InvalidK(ValidationError):
    pass


class InvalidN(ValidationError):
    pass


class KRequiredAtLeast2(ValidationError):
    pass


class UnsupportedScheme(CodeError, ValueError):
    pass


class OutOfRange(CodeError, ValueError):
    pass


class InvalidCodeword(CodeError, ValueError):
    """A bit pattern is not the image of any value under the code.

    ``index`` is set when the word came out of a packed stream.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class LengthMismatch(CodeError, ValueError):
    pass


class TableTooLarge(CodeError, ValueError):
    pass


class DuplicateCodeword(CodeError):
    pass


class StreamError(CodeError):
    pass


class BadMagic(StreamError):
    pass


class CorruptHeader(StreamError):
    pass


class TruncatedStream(StreamError):
    pass


class NonzeroPadding(StreamError):
    pass


class TrailingData(StreamError):
    pass
