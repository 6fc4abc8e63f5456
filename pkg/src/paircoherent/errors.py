"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the range an operation is defined on."""


class NumericalError(RuntimeError):
    """An iteration failed to converge or two computation routes disagree."""
