"""Errors shared across the package."""


class BudgetExceededError(RuntimeError):
    """A configured resource cap (pair count, basis size, subset count) was hit."""


class StabilizationError(RuntimeError):
    """A truncated computation did not stabilize; retry with a larger bound."""
