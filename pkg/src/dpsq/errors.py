"""Exception types shared across the package.

The CLI maps these onto exit codes: ``InputError`` -> 2, ``BudgetError`` -> 3.
"""

from __future__ import annotations


class InputError(ValueError):
    """Malformed or out-of-contract input (bad edge, unknown name, ...)."""


class InvalidCoverError(InputError):
    """A cover violates the matching conditions of a correspondence assignment."""


class BudgetError(RuntimeError):
    """A search exceeded its configured budget.

    ``covered`` records how much of the search space was processed before the
    cap was hit, so callers can report partial progress instead of a verdict.
    """

    def __init__(self, message: str, covered: int = 0, bracket: tuple[int, int] | None = None):
        super().__init__(message)
        self.covered = covered
        self.bracket = bracket
