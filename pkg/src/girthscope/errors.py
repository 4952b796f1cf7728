"""Exception types shared across the package."""


class GirthscopeError(Exception):
    """Base class for all girthscope errors."""


class ParseError(GirthscopeError):
    """Malformed graph input; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ValidationError(GirthscopeError):
    """Structurally valid input that violates a contract (self-loop, bad weight, bad flag combo)."""


class BudgetExceededError(GirthscopeError):
    """An exhaustive operation refused to run because the input exceeds its budget."""
