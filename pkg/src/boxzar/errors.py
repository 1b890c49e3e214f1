"""Exception types shared across the package."""


class BoxZarError(Exception):
    """Base class for all package errors."""


class PreconditionError(BoxZarError, ValueError):
    """An operation was called on input outside its contract."""


class DimensionMismatch(PreconditionError):
    pass


class BudgetExceeded(BoxZarError, RuntimeError):
    """An exact search ran out of its node budget without a verdict.

    Never interpreted as "absent": callers must treat it as inconclusive.
    """

    def __init__(self, budget: int, message: str | None = None):
        self.budget = budget
        super().__init__(message or f"search budget of {budget} nodes exceeded")


class DirectionParseError(BoxZarError, ValueError):
    def __init__(self, message: str, position: int, text: str):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}: {text!r}")


class ForbiddenPattern(PreconditionError):
    """The instance contains the biclique a bound check assumes absent."""
