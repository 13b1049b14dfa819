"""
Error Types
Exceptions raised by the exact algebra core.
"""


class CliffordError(Exception):
    """Base class for every error raised by the library."""


class DimensionMismatchError(CliffordError):
    """Operands live in algebras (or variable sets) of different size."""


class ScalarDomainError(CliffordError, ArithmeticError):
    """Division by zero, a missing exact square root, or an invalid relation."""


class SubstitutionError(CliffordError):
    """Substitution or evaluation that would leave an undeclared or cyclic variable."""


class EchelonShapeError(CliffordError):
    """Vectors do not have the echelon shape of a canonical basis."""


class BoundsError(CliffordError, ValueError):
    """An integer argument is outside the supported range."""
