class ValidationError(ValueError):
    """Input violates a contract precondition."""


class SolverError(ArithmeticError):
    """Root finder did not produce a yield."""


class NoRootError(SolverError):
    """Target price is not attainable on the search bracket."""
