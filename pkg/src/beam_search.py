"""
Beam search for small k-dominating sets, as a LangGraph workflow.

The search keeps up to b partial solutions. Each round expands every one of
them by every vertex it does not contain, drops duplicate member sets, sorts
by the unconstrained objective (ties in random order) and keeps the first b.
It stops as soon as a retained entry is k-dominating and returns the
highest-ranked such entry. With b = 1 this is the greedy search.

Workflow:

    check_beam ──(feasible)──> END
        │
        └─(not yet)──> expand_beam ──> rank_beam ──> check_beam

Member sets grow by one vertex per round and the full vertex set is
feasible, so at most n rounds run.
"""
from typing import Tuple

import numpy as np
from langgraph.graph import END, StateGraph

from src.config import SolveConfig
from src.coverage import verify_k_dominating
from src.edges import route_after_beam_check
from src.errors import InfeasibleSolutionError
from src.graph_builder import WorkflowBuilder
from src.graph_core import Graph
from src.nodes import check_beam, expand_beam, rank_beam
from src.state import Beam, BeamState, MemberSignatures, PartialSolution


class BeamSearch:
    """
    Beam search bound to one graph and one SolveConfig.

    Example:
        .. code-block:: python

            search = BeamSearch(graph, SolveConfig(k=2, seed=7, beam_width=4))
            solution = search.run()
            print(solution.members, solution.history)
    """

    def __init__(self, graph: Graph, cfg: SolveConfig):
        self.graph = graph
        self.cfg = cfg
        self.rng = np.random.default_rng(cfg.seed)
        self.signatures = MemberSignatures(graph.n)

        # Keys must match the type-hint class names used by the nodes
        self.dependencies = {
            "SolveConfig": cfg,
            "Generator": self.rng,
            "MemberSignatures": self.signatures,
        }
        self.builder = WorkflowBuilder(self.dependencies)
        self.workflow = self._build_workflow()

    def _build_workflow_uncompiled(self) -> StateGraph:
        workflow = StateGraph(BeamState)
        workflow.add_node("check_beam", self.builder.create_node(check_beam))
        workflow.add_node("expand_beam", self.builder.create_node(expand_beam))
        workflow.add_node("rank_beam", self.builder.create_node(rank_beam))

        # The initial beam holds only the empty set, feasible only when n = 0
        workflow.set_entry_point("check_beam")
        workflow.add_conditional_edges(
            "check_beam",
            route_after_beam_check,
            {"expand_beam": "expand_beam", END: END},
        )
        workflow.add_edge("expand_beam", "rank_beam")
        workflow.add_edge("rank_beam", "check_beam")
        return workflow

    def _build_workflow(self):
        return self._build_workflow_uncompiled().compile()

    def get_graph(self) -> StateGraph:
        """Uncompiled workflow, for drawing."""
        return self._build_workflow_uncompiled()

    def run(self) -> PartialSolution:
        """Run the search to completion and return the selected entry."""
        initial_state: BeamState = {
            "beam": Beam([PartialSolution.empty(self.graph, self.cfg.k)]),
            "candidates": {},
            "round": 0,
            "solution": None,
            "verbose": self.cfg.verbose,
        }
        # three supersteps per round, at most n rounds, plus the entry check
        limit = 3 * (self.graph.n + 1) + 5
        final_state = self.workflow.invoke(initial_state, config={"recursion_limit": limit})
        solution = final_state["solution"]
        if solution is None:
            raise InfeasibleSolutionError("beam search ended without a feasible entry")
        return solution


def beam_k_domination(graph: Graph, cfg: SolveConfig) -> Tuple[int, ...]:
    """
    Beam search with width cfg.beam_width; returns D as a sorted tuple.

    Raises:
        InfeasibleSolutionError: The result failed re-verification.
    """
    members = BeamSearch(graph, cfg).run().members
    if not verify_k_dominating(graph, cfg.k, members):
        raise InfeasibleSolutionError(f"beam search returned a set that is not {cfg.k}-dominating")
    return members
