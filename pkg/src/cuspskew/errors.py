"""Exception types shared across the package.

The CLI maps each of these to a fixed exit code, so library code raises them
rather than returning sentinel values.
"""


class ParseError(ValueError):
    """Malformed braid text, torus triple, graph file or CLI argument."""


class StrandMismatch(ValueError):
    """Two braids on different numbers of strands were combined."""


class BudgetExceeded(RuntimeError):
    """A search or rewriting loop ran past its configured step budget."""

    def __init__(self, what: str, budget: int):
        super().__init__(f"{what}: budget of {budget} steps exceeded")
        self.what = what
        self.budget = budget


class HypothesisViolation(ValueError):
    """Inputs fall outside the regime where an estimate is valid.

    ``gate`` names the failed condition (e.g. ``"A"`` or ``"B"``).
    """

    def __init__(self, gate: str, message: str):
        super().__init__(f"hypothesis: {gate}: {message}")
        self.gate = gate
