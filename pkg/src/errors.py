"""
Exception types shared across the package.
"""


class GraphFormatError(ValueError):
    """An edge-list line could not be parsed or violates the graph rules."""

    def __init__(self, line_number: int, reason: str):
        super().__init__(f"line {line_number}: {reason}")
        self.line_number = line_number
        self.reason = reason


class InfeasibleSolutionError(RuntimeError):
    """A solver produced a set that is not k-dominating. Always a solver bug."""


class BudgetExhaustedError(RuntimeError):
    """The exact search hit its node limit before proving an optimum."""

    def __init__(self, nodes_explored: int):
        super().__init__(f"exact search gave up after {nodes_explored} nodes (budget exhausted)")
        self.nodes_explored = nodes_explored
