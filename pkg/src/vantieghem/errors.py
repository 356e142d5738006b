"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the domain an operation is defined on."""


class PathUnavailable(DomainError):
    """The structured evaluation path was requested for a composite exponent."""


class NotDivisible(ArithmeticError):
    """An exact division was requested but the divisor does not divide."""
