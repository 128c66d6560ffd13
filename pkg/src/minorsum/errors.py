"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class ResourceLimitError(RuntimeError):
    """A guard on problem size was exceeded."""
