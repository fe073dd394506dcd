class DimensionError(ValueError):
    """Operand shapes are incompatible for the requested operation."""


class UsageError(RuntimeError):
    """An operation was invoked outside its contract (e.g. backward on a non-scalar)."""


class ParameterError(ValueError):
    """A hyperparameter is outside its valid range."""
