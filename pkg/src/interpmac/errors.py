"""Exception types shared across the package."""


class InterpmacError(Exception):
    """Base class for all package errors."""


class DivisionByZero(InterpmacError, ZeroDivisionError):
    """Division or inversion by an exact zero."""


class SpecializationCollision(InterpmacError):
    """A parameter specialization zeroed a denominator or collapsed
    spectral points, making the requested computation ill-posed."""


class DimensionError(InterpmacError, ValueError):
    """Operands have incompatible lengths or variable counts."""


class DegreeError(InterpmacError, ValueError):
    """A polynomial violates a stated degree bound."""


class UnsupportedSubstitution(InterpmacError, ValueError):
    """An affine substitution would turn a negative power into a
    non-monomial expression."""


class UsageError(InterpmacError, ValueError):
    """Invalid arguments at the API or CLI surface."""
