"""
State definitions for the LangGraph workflows.

Two workflows pass state between their nodes:

- Beam search: BeamState carries the current beam, the raw expansion of
  that beam, the round counter and, once found, the returned solution.
- Experiment runner: ExperimentState carries the plan, the loaded instance,
  the per-seed trial records and the final statistics.

Nodes receive the current state, update some fields and return it.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, TypedDict

import numpy as np

from src.coverage import CoverageState
from src.graph_core import Graph, StreetNetwork

METHODS = ("greedy", "beam", "standard", "couture", "exact")

_SIGNATURE_ENTROPY = 0x6B646F6D


class MemberSignatures:
    """
    One fixed random 64-bit word per vertex. The XOR of the words of a
    vertex set is its signature, so the signature of s ∪ {u} is one XOR away
    from the signature of s. Equal member sets always share a signature;
    equal signatures are confirmed on the member sets themselves.
    """

    def __init__(self, n: int):
        self.words = np.random.SeedSequence([_SIGNATURE_ENTROPY, n]).generate_state(
            n, dtype=np.uint64
        )

    def of(self, members) -> int:
        signature = np.uint64(0)
        for v in members:
            signature ^= self.words[v]
        return int(signature)


@dataclass
class PartialSolution:
    """
    A vertex subset under construction.

    Attributes:
        members: Sorted vertex indices.
        objective_value: Unconstrained objective of ``members``.
        state: Coverage counters for ``members``.
        history: Vertices in the order they were added.
        signature: XOR signature of ``members``.
    """
    members: Tuple[int, ...]
    objective_value: int
    state: CoverageState
    history: Tuple[int, ...] = ()
    signature: int = 0

    @classmethod
    def empty(cls, graph: Graph, k: int) -> "PartialSolution":
        return cls(members=(), objective_value=0, state=CoverageState(graph, k))


@dataclass
class Beam:
    """Ranked partial solutions, best first, at most b after truncation."""
    solutions: List[PartialSolution] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.solutions)

    def objective_values(self) -> List[int]:
        return [s.objective_value for s in self.solutions]

    def first_feasible(self) -> Optional[PartialSolution]:
        for solution in self.solutions:
            if solution.state.is_k_dominating():
                return solution
        return None


class BeamState(TypedDict):
    """
    State container for the beam-search workflow.

    Attributes:
        beam: The retained partial solutions of the current round.
        candidates: Expansion of ``beam`` as parallel arrays
            {"parent", "vertex", "objective", "signature"}; "parent" indexes
            ``beam.solutions``. Empty until the first expansion.
        round: Number of completed expand/rank rounds.
        solution: The returned k-dominating set once one is retained.
        verbose: Print node progress to stderr.

    Example:
        Initial state on any graph:

        .. code-block:: python

            {
                "beam": Beam([PartialSolution.empty(graph, k)]),
                "candidates": {},
                "round": 0,
                "solution": None,
                "verbose": False,
            }
    """
    beam: Beam
    candidates: Dict[str, np.ndarray]
    round: int
    solution: Optional[PartialSolution]
    verbose: bool


@dataclass(frozen=True)
class ExperimentPlan:
    """
    One (graph, method, k, b) experiment over a list of seeds.

    Attributes:
        graph_path: Edge-list file of the instance.
        method: One of greedy | beam | standard | couture | exact.
        k: Domination level.
        seeds: Per-trial seeds, non-empty and distinct.
        beam_width: Required for beam, forbidden otherwise.
        threshold_t: If set, ``graph_path`` is a weighted street network and
            the trials run on its reachability graph for this threshold.
        serial_timing: Run trials one after another so timings do not
            contend; otherwise up to ``workers`` trials run concurrently.
        workers: Thread count when ``serial_timing`` is off.
        node_budget: Node limit for the exact method.
    """
    graph_path: str
    method: str
    k: int
    seeds: Tuple[int, ...]
    beam_width: Optional[int] = None
    threshold_t: Optional[float] = None
    serial_timing: bool = True
    workers: int = 1
    node_budget: Optional[int] = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {', '.join(METHODS)}, got {self.method!r}")
        if self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")
        if not self.seeds:
            raise ValueError("seeds must not be empty")
        if len(set(self.seeds)) != len(self.seeds):
            raise ValueError("seeds must be distinct")
        if (self.method == "beam") != (self.beam_width is not None):
            raise ValueError("beam_width is required for method 'beam' and only for it")
        if self.beam_width is not None and self.beam_width < 1:
            raise ValueError(f"beam_width must be a positive integer, got {self.beam_width!r}")
        if self.threshold_t is not None and not self.threshold_t > 0:
            raise ValueError(f"threshold_t must be > 0, got {self.threshold_t!r}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers!r}")


class ExperimentState(TypedDict):
    """
    State container for the experiment workflow.

    Attributes:
        plan: The experiment to run.
        graph: Instance the trials run on (after any reachability step).
        street_network: Weighted input when the plan names a threshold.
        trials: One record per seed: {"seed", "members", "size", "time_s"}.
        stats: Summary built by summarize_trials (a TrialStats).
        verbose: Print node progress to stderr.
    """
    plan: ExperimentPlan
    graph: Optional[Graph]
    street_network: Optional[StreetNetwork]
    trials: List[Dict[str, Any]]
    stats: Any
    verbose: bool
