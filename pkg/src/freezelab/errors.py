"""Exception hierarchy shared across the package."""


class FreezelabError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(FreezelabError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class PoleError(DomainError):
    """The argument sits on a pole of the requested function."""

    def __init__(self, x):
        self.x = x
        super().__init__(f"argument {x} is a pole")


class UnsupportedOrderError(DomainError):
    """Bessel order outside the implemented set {0, 1}."""


class ResolutionError(FreezelabError, ValueError):
    """A grid is too coarse for the requested evaluation."""


class ShapeError(FreezelabError, ValueError):
    """Inputs that must share a common shape or metadata do not."""


class AggregationError(FreezelabError, ValueError):
    """Samples being reduced do not share the required metadata, or are empty."""


class SizeError(FreezelabError, ValueError):
    """A dense-linear-algebra budget (matrix dimension) was exceeded."""


class PrecisionError(FreezelabError, ArithmeticError):
    """A computation could not reach its accuracy contract."""


class DivergenceError(FreezelabError, ValueError):
    """A requested moment or integral diverges for these parameters."""


class NormalizationError(FreezelabError, ValueError):
    """Sample statistics are degenerate and cannot be normalized."""


class DesignError(FreezelabError, ValueError):
    """An experiment design precondition (sample spread, interval layout) fails."""


class UsageError(FreezelabError, ValueError):
    """Invalid CLI arguments or configuration."""
