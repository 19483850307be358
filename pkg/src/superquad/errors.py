"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class DegenerateInstanceError(ValueError):
    """The inputs make the claim undefined (for example x == y where a mean over [x, y] is taken)."""


class InvalidInstanceError(ValueError):
    """An operator instance violates the hypotheses of the claim being checked."""


class SamplingError(RuntimeError):
    """Rejection sampling exhausted its retry budget."""
