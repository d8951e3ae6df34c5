"""Exception types raised across the toolkit."""


class GraverForgeError(Exception):
    """Base class for every error raised by this package."""


class ParseError(GraverForgeError, ValueError):
    pass


class ShapeMismatch(GraverForgeError, ValueError):
    pass


class DimensionMismatch(GraverForgeError, ValueError):
    pass


class DependentBasis(GraverForgeError, ValueError):
    """The selected columns are linearly dependent."""


class VertexMismatch(GraverForgeError, ValueError):
    pass


class NotIntegral(GraverForgeError, ValueError):
    """A fractional entry was passed where a prime-field matroid needs integers."""


class UnknownElement(GraverForgeError, KeyError):
    pass


class OverlapError(GraverForgeError, ValueError):
    pass


class TooLarge(GraverForgeError, ValueError):
    """The requested exhaustive check exceeds its configured subset budget."""


class EmptyMatroid(GraverForgeError, ValueError):
    pass


class LabelMismatch(GraverForgeError, ValueError):
    """Tree labels do not cover the matroid's ground set exactly."""


class InvalidTree(GraverForgeError, ValueError):
    pass


class InvalidTrace(GraverForgeError, ValueError):
    pass


class NoCircuits(GraverForgeError, ValueError):
    """The matrix has a trivial kernel, so it has no circuits."""


class BudgetExceeded(GraverForgeError, RuntimeError):
    pass


class BoxTooSmall(GraverForgeError, RuntimeError):
    """A minimal kernel vector touches the enumeration box boundary."""


class GraverMismatch(GraverForgeError, RuntimeError):
    """Completion and box enumeration disagree; one of them is wrong."""


class NotBipartition(GraverForgeError, ValueError):
    pass


class BadParams(GraverForgeError, ValueError):
    pass
