"""Exception types shared across the package."""


class DomainError(ValueError):
    """Raised when an input is outside an operation's mathematical domain."""


class ScaleError(DomainError):
    """Raised when a brute-force oracle refuses an infeasibly large input."""
