"""
Exact minimum k-dominating sets for small graphs.

Iterative deepening over the target size m = 0, 1, 2, ...; for each m a
depth-first search decides whether some k-dominating set of size m exists.
The first m that succeeds is the optimum, since every smaller size was
searched exhaustively.

Branching: take the vertex v that is not covered enough and has the fewest
ways left to fix that (v itself if still undecided, plus its undecided
neighbours). Any feasible completion contains at least one of those options,
so the search tries "option i is in D, options before i are not" for each i.

Pruning, with p picks left:
    - a vertex excluded from D that needs more neighbours than p, or than
      it has undecided neighbours, kills the branch;
    - p = 0 with any vertex still not covered enough kills the branch.

A node budget turns an over-long search into an explicit "unknown" result.
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.config import DEFAULT_NODE_BUDGET
from src.graph_core import Graph

UNDECIDED, INCLUDED, EXCLUDED = 0, 1, 2


@dataclass(frozen=True)
class ExactResult:
    """
    Attributes:
        status: "optimal", or "unknown" when the node budget ran out.
        optimum_size: Size of a minimum k-dominating set (None if unknown).
        witness: One minimum k-dominating set, sorted (None if unknown).
        nodes_explored: Search nodes visited over all depths.
    """
    status: str
    optimum_size: Optional[int]
    witness: Optional[Tuple[int, ...]]
    nodes_explored: int

    @property
    def is_optimal(self) -> bool:
        return self.status == "optimal"


class _BudgetExhausted(Exception):
    pass


class _Search:
    def __init__(self, graph: Graph, k: int, budget: Optional[int]):
        self.adjacency = graph.adjacency
        self.n = graph.n
        self.k = k
        self.budget = budget
        self.nodes = 0
        self.decision = [UNDECIDED] * graph.n
        self.cov = [0] * graph.n

    def include(self, v: int) -> None:
        self.decision[v] = INCLUDED
        for w in self.adjacency[v]:
            self.cov[w] += 1

    def undo_include(self, v: int) -> None:
        self.decision[v] = UNDECIDED
        for w in self.adjacency[v]:
            self.cov[w] -= 1

    def _branch_options(self, picks_left: int) -> Optional[List[int]]:
        """
        None if the node is feasible already, [] if it is dead, otherwise
        the options of the most constrained vertex.
        """
        best: Optional[List[int]] = None
        for v in range(self.n):
            status = self.decision[v]
            if status == INCLUDED or self.cov[v] >= self.k:
                continue
            if picks_left == 0:
                return []
            free = [w for w in self.adjacency[v] if self.decision[w] == UNDECIDED]
            if status == EXCLUDED:
                need = self.k - self.cov[v]
                if need > picks_left or need > len(free):
                    return []
                options = free
            else:
                options = free + [v]
            if best is None or len(options) < len(best):
                best = options
        return best

    def solve(self, picks_left: int) -> bool:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetExhausted()
        options = self._branch_options(picks_left)
        if options is None:
            return True
        excluded = []
        found = False
        for x in options:
            self.include(x)
            found = self.solve(picks_left - 1)
            if found:
                break
            self.undo_include(x)
            self.decision[x] = EXCLUDED
            excluded.append(x)
        for x in excluded:
            self.decision[x] = UNDECIDED
        return found

    def witness(self) -> Tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.decision[v] == INCLUDED)


def exact_min_k_dominating(
    graph: Graph,
    k: int,
    budget: Optional[int] = DEFAULT_NODE_BUDGET
) -> ExactResult:
    """
    Minimum k-dominating set by iterative deepening.

    Args:
        graph: Input graph; intended for roughly 25 vertices or fewer.
        k: Domination level, at least 1.
        budget: Maximum number of search nodes over all depths, or None.

    Returns:
        ExactResult with status "optimal", or "unknown" if the budget ran
        out first. An unknown result never carries a size or witness.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    search = _Search(graph, k, budget)
    try:
        for m in range(graph.n + 1):
            if search.solve(m):
                witness = search.witness()
                return ExactResult("optimal", len(witness), witness, search.nodes)
    except _BudgetExhausted:
        return ExactResult("unknown", None, None, search.nodes)
    raise AssertionError("the full vertex set is always k-dominating")
