"""
Baseline heuristics the coverage-objective methods are compared against.

standard_greedy
    Adds, uniformly at random among the best, a vertex whose closed
    neighbourhood holds the most vertices that are not dominated enough
    (outside D with fewer than k neighbours in D).

couture_k_domination
    Layered maximal independent sets: each round takes a maximal independent
    set of the subgraph induced by the vertices that are not dominated
    enough and adds all of it to D. Every round raises the coverage of each
    remaining vertex by at least one, so k rounds always suffice.
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from src.config import SolveConfig, progress
from src.coverage import CoverageState, verify_k_dominating
from src.errors import InfeasibleSolutionError
from src.graph_core import Graph
from src.greedy import tie_break


def closed_scores(state: CoverageState) -> np.ndarray:
    """
    |{v in N[u] : v not in D, cov[v] < k}| for every u; members of D get the
    minimum int64 value.
    """
    scores = state.undom_nbrs + state.needy_mask().astype(np.int64)
    scores[state.in_D] = np.iinfo(np.int64).min
    return scores


def standard_candidates(state: CoverageState) -> np.ndarray:
    """Sorted vertices outside D with maximal closed-neighbourhood score."""
    scores = closed_scores(state)
    outside = ~state.in_D
    if not outside.any():
        return np.empty(0, dtype=np.int64)
    best = scores[outside].max()
    return np.flatnonzero(outside & (scores == best))


def _checked(graph: Graph, cfg: SolveConfig, members: Tuple[int, ...], name: str) -> Tuple[int, ...]:
    progress(f"✓ SOLVE: {name} k={cfg.k} seed={cfg.seed} -> |D|={len(members)}", cfg.verbose)
    if not verify_k_dominating(graph, cfg.k, members):
        raise InfeasibleSolutionError(f"{name} returned a set that is not {cfg.k}-dominating")
    return members


def standard_greedy(graph: Graph, cfg: SolveConfig) -> Tuple[int, ...]:
    """Closed-neighbourhood greedy; returns D as a sorted tuple of indices."""
    rng = np.random.default_rng(cfg.seed)
    state = CoverageState(graph, cfg.k)
    while not state.is_k_dominating():
        state.add_vertex(tie_break(state, standard_candidates(state), rng))
    return _checked(graph, cfg, state.members(), "standard")


@dataclass
class CoutureRound:
    """One layer: the vertices not dominated enough and the MIS taken from them."""
    undominated: np.ndarray
    independent_set: np.ndarray


def random_sequential_mis(graph: Graph, vertices: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """
    Maximal independent set of the subgraph induced by ``vertices``.

    Scans a random permutation of ``vertices`` and takes each vertex that has
    no neighbour taken before it. Returns the taken vertices in scan order.
    """
    allowed = np.zeros(graph.n, dtype=bool)
    allowed[vertices] = True
    blocked = np.zeros(graph.n, dtype=bool)
    taken = []
    for v in rng.permutation(vertices):
        v = int(v)
        if blocked[v]:
            continue
        taken.append(v)
        nbrs = graph.neighbors(v)
        blocked[nbrs[allowed[nbrs]]] = True
    return np.asarray(taken, dtype=np.int64)


def couture_k_domination(
    graph: Graph,
    cfg: SolveConfig,
    trace: Optional[List[CoutureRound]] = None
) -> Tuple[int, ...]:
    """
    Layered MIS baseline; returns D as a sorted tuple of indices.

    Args:
        trace: If given, receives one CoutureRound per round.
    """
    rng = np.random.default_rng(cfg.seed)
    state = CoverageState(graph, cfg.k)
    while not state.is_k_dominating():
        undominated = np.flatnonzero(state.needy_mask())
        independent = random_sequential_mis(graph, undominated, rng)
        if trace is not None:
            trace.append(CoutureRound(undominated=undominated, independent_set=independent))
        for v in independent:
            state.add_vertex(int(v))
    return _checked(graph, cfg, state.members(), "couture")
