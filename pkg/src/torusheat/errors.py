"""Exception types raised across the package."""


class DomainError(ValueError):
    """Argument outside the domain where a function is defined or supported."""


class ConvergenceError(ArithmeticError):
    """An iterative method hit its iteration cap before reaching tolerance."""


class RangeError(OverflowError):
    """Result is not representable as a finite binary64 number."""
