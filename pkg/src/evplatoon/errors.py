"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid configuration value (bad step size, malformed scenario, ...)."""


class DomainError(ValueError):
    """Input outside an operation's mathematical domain (non-finite state,
    empty series, zero-norm denominator, ...)."""


class FittingError(RuntimeError):
    """Parameter identification failed to produce a usable fit."""


class DivergenceError(RuntimeError):
    """Simulation produced a non-finite state; carries the offending step."""

    def __init__(self, message: str, step: int | None = None, vehicle: int | None = None):
        super().__init__(message)
        self.step = step
        self.vehicle = vehicle
