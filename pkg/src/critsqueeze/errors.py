"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument outside the domain of a model quantity."""


class CriticalSingularity(ArithmeticError):
    """Raised at delta == 0, where the quadratic theory has no finite closed form."""


class ConsistencyError(ArithmeticError):
    """A closed-form evaluation produced an impossible value (e.g. a negative radicand)."""


class ConvergenceFailure(RuntimeError):
    """Cutoff doubling did not converge; ``record`` holds every step taken."""

    def __init__(self, message, record=None):
        super().__init__(message)
        self.record = list(record or [])


class SchemaError(ValueError):
    """Input table does not match the expected column schema."""

    def __init__(self, message, column=None):
        super().__init__(message)
        self.column = column
