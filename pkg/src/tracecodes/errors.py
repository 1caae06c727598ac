"""Exception hierarchy shared by every module of the package."""


class TraceCodeError(ValueError):
    """Base class for all domain errors raised by tracecodes."""


class NotPrime(TraceCodeError):
    pass


class ReducibleModulus(TraceCodeError):
    pass


class NoDefaultModulus(TraceCodeError):
    pass


class DivisionByZero(TraceCodeError, ZeroDivisionError):
    pass


class SpecMismatch(TraceCodeError):
    """Operands live in different fields."""


class DegreeNotDivisible(TraceCodeError):
    pass


class NotInSubfield(TraceCodeError):
    pass


class ZeroElement(TraceCodeError):
    pass


class TooLarge(TraceCodeError):
    """An exhaustive enumeration would exceed the desk-scale cap."""


class ZeroCode(TraceCodeError):
    pass


class LengthMismatch(TraceCodeError):
    pass


class NotDivisor(TraceCodeError):
    pass


class NonIntegerSum(TraceCodeError):
    """A character sum that must be a rational integer is not one.

    This can only happen through an arithmetic bug.
    """


class NotNormal(TraceCodeError):
    pass


class GcdNotOne(TraceCodeError):
    pass


class FactorMismatch(TraceCodeError):
    pass


class LinearDependence(TraceCodeError):
    pass


class ParseError(TraceCodeError):
    pass
