"""Exception hierarchy shared by every module."""


class GeometryError(Exception):
    """Base class for all errors raised by hyperlines."""


class DimensionError(GeometryError, ValueError):
    """Array shapes do not match."""


class DomainError(GeometryError, ValueError):
    """Input violates a type invariant (off the hyperboloid, not tangent, ...)."""


class RangeError(GeometryError, ValueError):
    """Parameter outside the guarded range (cosh overflow protection)."""


class FeatureError(GeometryError):
    """Operation only defined for a specific n (g0 and j0 need n=2, octonions n=6)."""


class NumericError(GeometryError, ArithmeticError):
    """An iterative or finite-difference procedure failed to converge."""
