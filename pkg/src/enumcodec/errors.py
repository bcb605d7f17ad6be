"""Exception hierarchy.

Everything raised for bad input derives from :class:`EncodingError`, which
the CLI maps to exit status 2.
"""


class EncodingError(ValueError):
    """Base class for domain errors."""


class InvalidStringError(EncodingError):
    """A string contains a symbol outside its alphabet."""


class FramingError(EncodingError):
    """A bit string cannot be split into whole codeword blocks."""


class UnmappedCodewordError(EncodingError):
    """A block matches no codeword of the code."""


class DecimalParseError(EncodingError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class NotInImageError(EncodingError):
    """An integer lies outside the image of an injective encoder."""


class OutOfRangeError(EncodingError):
    """A query reaches past the end of a finite table."""


class TableFormatError(EncodingError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DuplicateSourceError(EncodingError):
    """A source label was already assigned."""


class InsufficientInputError(EncodingError):
    """A label stream ran out before the requested number of steps."""
