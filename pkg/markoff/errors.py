"""Errors raised by markoff.

All errors inherit from `MarkoffError`, itself a `ValueError`, so callers
that only care about bad input can keep catching `ValueError`.

"""


class MarkoffError(ValueError):

    """Base class for all markoff errors."""


class InvalidDenominatorError(MarkoffError):

    """A surd was built with a zero denominator."""


class FieldMismatchError(MarkoffError):

    """Two values do not live in a common (bi)quadratic field."""


class DivisionByZeroError(MarkoffError, ZeroDivisionError):

    """Division by an exact zero."""


class UnsupportedAlphabetError(MarkoffError):

    """A word has letters beyond the bound the estimates are proved for."""


class PreconditionError(MarkoffError):

    """An operation was called outside of its domain."""


class WindowCapError(MarkoffError):

    """The certification window grew beyond the configured cap."""


class CFSyntaxError(MarkoffError):

    """Text that can't be parsed as a continued fraction or a sequence.

    The `position` attribute holds the 0-based offset of the offending
    character in the parsed text.

    """

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} (at position {position} in {text!r})")
        self.text = text
        self.position = position
