"""Error types shared across the numerical pipelines."""


class NonConvergentError(RuntimeError):
    """A truncated determinant or reflection series cannot be trusted.

    Raised when the round-trip operator has spectral radius >= 1 or the
    log-determinant fails its residual check, typically because the bodies
    are too close for the requested truncation order.
    """


class QuadratureNotConvergedError(RuntimeError):
    """A quadrature result moved more than the requested tolerance under
    node doubling or a grid-refinement check."""


class InsufficientStatisticsError(RuntimeError):
    """A Monte Carlo estimate did not reach the requested relative error."""
