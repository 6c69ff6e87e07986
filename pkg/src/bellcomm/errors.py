"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Operands have incompatible matrix dimensions."""


class DomainError(ValueError):
    """An input lies outside the documented domain of an operation."""


class OptimizationError(RuntimeError):
    """Search failed; carries the offending parameter point when known."""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point
