"""
Coverage-objective greedy search for small k-dominating sets.

Starting from D = {}, every step computes the gain of each vertex outside D
and adds one vertex drawn uniformly from those with maximum gain, until every
vertex outside D has k neighbours in D. The draw gives every vertex outside D
a uniform key, in index order, and takes the lowest key among the maximum-gain
vertices; beam search with b = 1 consumes its generator the same way. The gain counts neighbours that still
need coverage and subtracts how covered the candidate itself already is, so
among equal neighbourhood counts the least covered candidate wins.
"""
from typing import List, Optional, Tuple

import numpy as np

from src.config import SolveConfig, progress
from src.coverage import CoverageState, verify_k_dominating
from src.errors import InfeasibleSolutionError
from src.graph_core import Graph


def greedy_candidates(state: CoverageState) -> np.ndarray:
    """Sorted vertices outside D whose gain is maximal (the argmax set U)."""
    gains = state.delta_all()
    outside = ~state.in_D
    if not outside.any():
        return np.empty(0, dtype=np.int64)
    best = gains[outside].max()
    return np.flatnonzero(outside & (gains == best))


def tie_break(state: CoverageState, candidates: np.ndarray, rng: np.random.Generator) -> int:
    """
    One uniform key per vertex outside D, in index order; the candidate with
    the lowest key wins.
    """
    outside = np.flatnonzero(~state.in_D)
    keys = rng.random(outside.size)
    return int(candidates[np.argmin(keys[np.searchsorted(outside, candidates)])])


def greedy_k_domination(
    graph: Graph,
    cfg: SolveConfig,
    trace: Optional[List[Tuple[np.ndarray, int]]] = None
) -> Tuple[int, ...]:
    """
    Run the greedy search and return D as a sorted tuple of vertex indices.

    Args:
        graph: Input graph.
        cfg: k and seed; beam_width is ignored.
        trace: If given, receives (argmax set, chosen vertex) for every step.

    Raises:
        InfeasibleSolutionError: The result failed re-verification.
    """
    rng = np.random.default_rng(cfg.seed)
    state = CoverageState(graph, cfg.k)

    while not state.is_k_dominating():
        candidates = greedy_candidates(state)
        chosen = tie_break(state, candidates, rng)
        if trace is not None:
            trace.append((candidates, chosen))
        state.add_vertex(chosen)

    members = state.members()
    progress(f"✓ SOLVE: greedy k={cfg.k} seed={cfg.seed} -> |D|={len(members)}", cfg.verbose)
    if not verify_k_dominating(graph, cfg.k, members):
        raise InfeasibleSolutionError(f"greedy returned a set that is not {cfg.k}-dominating")
    return members
