"""Exception types shared across the package.

Every error carries a stable ``code`` (the class name) so the CLI can emit
structured failures without string matching.
"""

from __future__ import annotations


class TensorError(Exception):
    """Base class for all package errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


class DimensionMismatch(TensorError):
    pass


class OrderMismatch(TensorError):
    pass


class ShapeMismatch(TensorError):
    pass


class ResultTooLarge(TensorError):
    pass


class NegativeBaseFractionalExponent(TensorError):
    pass


class InvalidPermutation(TensorError):
    pass


class SingularDiagonal(TensorError):
    pass


class NotUnitNorm(TensorError):
    pass


class NonPositiveVector(TensorError):
    pass


class EigenpairResidualTooLarge(TensorError):
    pass


class DegenerateForm(TensorError):
    pass


class UnsupportedDimension(TensorError):
    pass


class UnsupportedOrder(TensorError):
    pass


class ResultantDegreeError(TensorError):
    pass


class RootRefinementFailed(TensorError):
    pass


class UniformityMismatch(TensorError):
    pass


class FamilyExplosion(TensorError):
    pass


class CensusTooLarge(TensorError):
    pass


class NotIrreducible(TensorError):
    pass


class NotConverged(TensorError):
    """Raised when power iteration exhausts max_iter.

    Carries the last bracket so callers can inspect how close it got.
    """

    def __init__(self, message: str, bracket: tuple[float, float] | None = None,
                 iterations: int = 0):
        super().__init__(message)
        self.bracket = bracket
        self.iterations = iterations
