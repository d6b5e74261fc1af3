"""Exception hierarchy shared by every qtcodes module."""


class QTCodesError(Exception):
    """Base class for all library errors."""


class ParameterError(QTCodesError, ValueError):
    """An input parameter is outside the supported domain (CLI exit status 2)."""


class NotPrimePower(ParameterError):
    pass


class FieldMismatch(ParameterError):
    pass


class DivisionByZero(QTCodesError, ZeroDivisionError):
    pass


class ZeroElement(ParameterError):
    pass


class NotMonic(ParameterError):
    pass


class NotDivisible(QTCodesError, ArithmeticError):
    """Raised by exact division; ``remainder`` holds the nonzero remainder."""

    def __init__(self, remainder, message=None):
        self.remainder = remainder
        super().__init__(message or f"division leaves remainder {remainder}")


class DivisionByZeroPoly(DivisionByZero):
    pass


class RingMismatch(ParameterError):
    pass


class BadDegree(ParameterError):
    pass


class NotPrimitive(ParameterError):
    pass


class NotDivisor(ParameterError):
    pass


class NotSimplex(ParameterError):
    pass


class BadP(ParameterError):
    pass


class DuplicateSelection(ParameterError):
    pass


class NotCodeword(ParameterError):
    pass


class TooLarge(QTCodesError):
    """Exhaustive enumeration would exceed the codeword cap (CLI exit status 3)."""

    def __init__(self, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(f"enumeration of {size} codewords exceeds cap {cap}")


class ZeroDimensional(ParameterError):
    pass


class BadGeometry(ParameterError):
    pass


class BadInput(ParameterError):
    pass


class OutOfRange(ParameterError):
    pass


class GapMismatch(QTCodesError, AssertionError):
    pass


class VerificationError(QTCodesError):
    """A constructed code failed its own parameter check (CLI exit status 1)."""
