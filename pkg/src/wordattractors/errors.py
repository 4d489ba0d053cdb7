class OrderCapError(ValueError):
    """Requested word order exceeds the configured generation cap."""


class BudgetExceededError(RuntimeError):
    """Exhaustive search would visit more candidate subsets than allowed."""
