"""Exception types shared across the package.

The CLI maps these onto exit codes: domain errors exit 1, budget errors exit 2.
"""


class DomainError(ValueError):
    """Input is mathematically invalid (unit ideal, non-squarefree where required, ...)."""


class BudgetExceeded(RuntimeError):
    """A configured search or size cap was hit; no partial answer is returned."""
