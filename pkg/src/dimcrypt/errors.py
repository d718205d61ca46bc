"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An argument violates a documented precondition."""


class DomainError(ValueError):
    """A quantity is evaluated outside the region where it is defined."""


class SolverError(RuntimeError):
    """Root finding failed, e.g. the bracket shows no sign change."""
