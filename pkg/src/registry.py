"""
Tools injected into the experiment workflow.

InstanceLoader reads edge-list files once per (path, weighted) and hands out
the cached immutable result. SolverRegistry maps method names to solver
functions with one calling convention:

    solver(graph, cfg) -> sorted tuple of vertex indices

Example:
    .. code-block:: python

        registry = SolverRegistry(node_budget=100_000)
        members = registry.solve("couture", graph, SolveConfig(k=2, seed=11))
"""
from typing import Callable, Dict, Optional, Tuple, Union

from src.baselines import couture_k_domination, standard_greedy
from src.config import DEFAULT_NODE_BUDGET, SolveConfig
from src.errors import BudgetExhaustedError
from src.exact import exact_min_k_dominating
from src.graph_core import Graph, StreetNetwork, read_graph_file
from src.greedy import greedy_k_domination
from src.state import METHODS

Solver = Callable[[Graph, SolveConfig], Tuple[int, ...]]


class InstanceLoader:
    """Reads and caches edge-list files."""

    def __init__(self):
        self._cache: Dict[Tuple[str, bool], Union[Graph, StreetNetwork]] = {}

    def load(self, path: str, weighted: bool = False) -> Union[Graph, StreetNetwork]:
        """
        Args:
            path: Edge-list file.
            weighted: Parse ``u v w`` lines into a StreetNetwork.

        Raises:
            OSError: The file cannot be read.
            GraphFormatError: The file is not a valid edge list.
        """
        key = (path, weighted)
        if key not in self._cache:
            self._cache[key] = read_graph_file(path, weighted=weighted)
        return self._cache[key]


class SolverRegistry:
    """
    Method name -> solver.

    Attributes:
        node_budget: Node limit passed to the exact search.
    """

    def __init__(self, node_budget: Optional[int] = DEFAULT_NODE_BUDGET):
        # src.beam_search imports the node package, which imports this module
        from src.beam_search import beam_k_domination

        self.node_budget = node_budget
        self._solvers: Dict[str, Solver] = {
            "greedy": greedy_k_domination,
            "beam": beam_k_domination,
            "standard": standard_greedy,
            "couture": couture_k_domination,
            "exact": self._exact,
        }

    def _exact(self, graph: Graph, cfg: SolveConfig) -> Tuple[int, ...]:
        result = exact_min_k_dominating(graph, cfg.k, budget=self.node_budget)
        if not result.is_optimal:
            raise BudgetExhaustedError(result.nodes_explored)
        return result.witness

    def register(self, method: str, solver: Solver) -> None:
        """Register or replace the solver for a method name."""
        self._solvers[method] = solver

    def methods(self) -> Tuple[str, ...]:
        return tuple(m for m in METHODS if m in self._solvers)

    def get(self, method: str) -> Solver:
        try:
            return self._solvers[method]
        except KeyError:
            raise ValueError(f"unknown method {method!r}; expected one of {', '.join(self.methods())}")

    def solve(self, method: str, graph: Graph, cfg: SolveConfig) -> Tuple[int, ...]:
        return self.get(method)(graph, cfg)
