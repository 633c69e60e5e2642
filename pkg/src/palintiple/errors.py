"""Exception hierarchy shared by every module."""


class PalintipleError(ValueError):
    """Base class for all domain errors."""


class BadParameters(PalintipleError):
    """Multiplier or base outside 1 < n < b, b > 2."""


class NotAMultiple(PalintipleError):
    """The digit string is not n times its reversal."""


class LeadingZero(PalintipleError):
    """The number or its reversal has a leading zero."""


class NonIntegralDigit(PalintipleError):
    pass


class DigitOutOfRange(PalintipleError):
    pass


class NotDivisible(PalintipleError):
    """(n + 1) does not divide b."""


class InvalidRSequence(PalintipleError):
    """A bit sequence violates the r-sequence rules.

    ``bits`` holds the offending sequence (when one was computed) and
    ``index`` the first position that fails, or None for global failures.
    """

    def __init__(self, message, bits=None, index=None):
        super().__init__(message)
        self.bits = bits
        self.index = index


class CarryNotMultiple(PalintipleError):
    """A carry is not a multiple of n - 1."""

    def __init__(self, message, index):
        super().__init__(message)
        self.index = index


class CheckpointCorrupt(PalintipleError):
    pass
