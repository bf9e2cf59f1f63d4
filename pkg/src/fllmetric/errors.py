"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class UnsupportedRadiusError(DomainError):
    """The operation is only defined for a fixed set of radii."""


class ResourceGuardError(RuntimeError):
    """The requested enumeration exceeds the configured size guard."""

    def __init__(self, size: int, guard: int, what: str = "space"):
        self.size = size
        self.guard = guard
        super().__init__(
            f"{what} of size {size} exceeds guard {guard}; "
            f"raise the guard to at least {size} to proceed"
        )
