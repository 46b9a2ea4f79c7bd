"""Exception types shared across the package."""


class SpecError(ValueError):
    """Invalid potential parameters or unparseable potential text."""


class UnsupportedSpecError(SpecError):
    """Valid potential passed to an operation that does not support it."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of a special function."""


class ConvergenceError(RuntimeError):
    """An iterative evaluation failed its self-consistency or iteration cap."""


class GridError(RuntimeError):
    """Grid construction or grid compatibility failure."""


class GridGrowthExhaustedError(GridError):
    """Grid growth hit the hard extent cap without meeting the tail target."""


class IncompatibleDomainError(GridError):
    """Two sampled wavefunctions live on disjoint position ranges."""


class NormalizationError(ValueError):
    """Wavefunction has zero norm or is not normalized where required."""


class UnphysicalCovarianceError(ValueError):
    """Covariance matrix violates the pure-state Heisenberg bound."""


class TruncationError(RuntimeError):
    """Number-basis state carries weight on the top of the truncated basis."""
