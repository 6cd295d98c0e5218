"""Exception types shared across the package."""


class ConsistencyError(ArithmeticError):
    """An exact computation produced a value that cannot be valid output.

    Raised when a class sum fails to clear to an integer, a multiplicity
    comes out negative, or two independent evaluation routes disagree.
    Always indicates a bug, never bad input.
    """


class TheoremViolation(AssertionError):
    """A guaranteed existence statement found no witness."""
