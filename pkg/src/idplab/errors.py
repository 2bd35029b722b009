"""Exception types shared across the package."""


class IdpLabError(Exception):
    """Base class for all errors raised by this package."""


class NonPrimitiveRay(IdpLabError):
    """A ray generator whose entries have a common factor (or is zero)."""


class SmoothnessViolation(IdpLabError):
    """A candidate maximal cone whose generator matrix has |det| != 1."""

    def __init__(self, cone, det):
        self.cone = tuple(cone)
        self.det = det
        super().__init__(f"cone {self.cone} has determinant {det}, expected +-1")


class CompletenessViolation(IdpLabError):
    """The cones do not cover R^n (bad ridge counts, disconnection, or an uncovered direction)."""


class NotCovered(IdpLabError):
    """No maximal cone contains the queried vector."""


class NotConvex(IdpLabError):
    """A height vector whose support function fails the convexity criterion."""

    def __init__(self, collection, message="support function is not convex"):
        self.collection = tuple(collection) if collection is not None else None
        super().__init__(f"{message} (violating collection: {self.collection})")


class NegativeCanonicalParameter(IdpLabError):
    """Height normalization produced a negative parameter; the input was not convex."""


class PointNotInSum(IdpLabError):
    """The point to decompose lies outside the Minkowski sum polytope."""


class NoLatticePoint(IdpLabError):
    """The fiber intersection search found no lattice point.

    This must never happen on valid inputs; it signals a bug, not a property
    of the input.
    """


class ConvexityPostcheckFailed(IdpLabError):
    """A reduced fiber height vector failed its convexity check (branch misclassification)."""
