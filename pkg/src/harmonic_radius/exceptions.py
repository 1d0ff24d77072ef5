"""Exception hierarchy shared by all modules."""


class HarmonicRadiusError(Exception):
    """Base class for errors raised by this package."""


class DomainError(HarmonicRadiusError, ValueError):
    """An argument lies outside the domain on which an operation is defined."""


class PrecisionError(HarmonicRadiusError):
    """The stored truncation is too short for the requested accuracy."""

    def __init__(self, message, required_length=None):
        super().__init__(message)
        self.required_length = required_length


class PoleError(HarmonicRadiusError, ArithmeticError):
    """A quotient whose denominator vanishes (argument undefined)."""


class HypothesisError(HarmonicRadiusError):
    """A standing hypothesis such as ``|b1| < 1`` is violated."""


class NoRootError(HarmonicRadiusError):
    """No sign change of a radius polynomial was found on (0, 1)."""


class AmbiguityError(HarmonicRadiusError):
    """More than one sign change was found where a unique root was expected."""
