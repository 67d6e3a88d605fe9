"""Exception hierarchy shared by all modules."""


class CubiquityError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(CubiquityError):
    """A vector or matrix has the wrong dimension for the operation."""


class SingularMatrix(CubiquityError):
    """A basis matrix is not full rank (determinant zero)."""


class ResourceLimit(CubiquityError):
    """An enumeration would exceed the configured resource cap."""


class PreconditionFailed(CubiquityError):
    """A rewrite or decision precondition does not hold.

    The message names the violated clause.
    """


class NotNonAcute(PreconditionFailed):
    """The subset is not non-acute (positive norms, non-positive pairwise
    products, and norm dominating the negated off-diagonal row sum)."""


class NotOrthogonal(PreconditionFailed):
    """The subset does not have pairwise-orthogonal vectors of norm >= 1."""


class MixedSigns(CubiquityError):
    """Torus-link parameters must all share one sign."""


class ZeroParameter(CubiquityError):
    """Torus-link parameters must be nonzero."""


class MatrixFormatError(CubiquityError):
    """The matrix text input cannot be parsed."""
