"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Raised for invalid configuration values or unknown names."""


class DomainError(ValueError):
    """Raised when a problem dimension or domain is unusable."""


class PamStateError(RuntimeError):
    """Raised when a parameter-adaptation method is driven out of order."""


class BudgetError(RuntimeError):
    """Raised when counted evaluations would exceed the configured budget."""
