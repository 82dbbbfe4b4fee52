"""
LangGraph workflow for multi-seed k-domination experiments.

This module provides ExperimentRunner, which runs one ExperimentPlan
(graph, method, k, b, seeds) as a LangGraph workflow, and the helpers the
bench command builds its plans with.

Architecture:
    - Nodes: Functional node implementations in src/nodes/
        * Each node has explicit dependencies in its function signature
        * Dependencies are automatically injected by WorkflowBuilder
    - Edges: Routing functions in src/edges/
    - Builder: WorkflowBuilder in src/graph_builder.py
    - State: ExperimentState in src/state.py

Dependency Graph:
    - load_instance: [loader]
    - build_reachability_graph: []
    - run_trials: [solvers]
    - summarize_trials: []

Workflow:

    load_instance ──(threshold)──> build_reachability_graph ──┐
        │                                                     v
        └──(plain edge list)──────────────────────────> run_trials ──> summarize_trials ──> END

Per-trial seeds are derived from a master seed and the trial index, so
adding seeds never changes the earlier trials.
"""
import os
import sys
from typing import List, Optional

import numpy as np
from langgraph.graph import END, StateGraph

from src.config import DEFAULT_NODE_BUDGET, verbose_enabled
from src.edges import route_after_load
from src.graph_builder import WorkflowBuilder
from src.nodes import (
    build_reachability_graph,
    load_instance,
    run_trials,
    summarize_trials
)
from src.registry import InstanceLoader, SolverRegistry
from src.report import TrialStats
from src.state import ExperimentPlan, ExperimentState


def derive_seeds(master_seed: int, n_seeds: int) -> List[int]:
    """
    Seeds for trials 0..n_seeds-1.

    Seed i depends only on (master_seed, i): it is the first 64-bit word of
    SeedSequence(master_seed, spawn_key=(i,)).
    """
    if n_seeds < 1:
        raise ValueError(f"n_seeds must be a positive integer, got {n_seeds!r}")
    return [
        int(np.random.SeedSequence(master_seed, spawn_key=(i,)).generate_state(1, dtype=np.uint64)[0])
        for i in range(n_seeds)
    ]


class ExperimentRunner:
    """
    Runs ExperimentPlans through the experiment workflow.

    The loader and solver registry are shared by every plan the runner
    executes, so a file benchmarked with several methods is parsed once.

    Example:
        .. code-block:: python

            runner = ExperimentRunner()
            plan = ExperimentPlan("path.txt", "beam", k=2,
                                  seeds=tuple(derive_seeds(2019, 10)), beam_width=3)
            stats = runner.run(plan)
            print(stats.min_size, stats.mean_size, stats.stddev_size)
    """

    def __init__(
        self,
        loader: Optional[InstanceLoader] = None,
        solvers: Optional[SolverRegistry] = None,
        node_budget: Optional[int] = DEFAULT_NODE_BUDGET,
        verbose: Optional[bool] = None
    ):
        """
        Args:
            loader: Edge-list reader; a fresh caching loader by default.
            solvers: Method registry; built with ``node_budget`` by default.
            node_budget: Exact-search node limit for the default registry.
            verbose: Progress on stderr; KDOM_VERBOSE decides when None.
        """
        self.loader = loader or InstanceLoader()
        self.solvers = solvers or SolverRegistry(node_budget=node_budget)
        self.verbose = verbose_enabled() if verbose is None else verbose

        # Keys must match type hint class names in node functions
        self.dependencies = {
            "InstanceLoader": self.loader,
            "SolverRegistry": self.solvers,
        }
        self.builder = WorkflowBuilder(self.dependencies)
        self.workflow = self._build_workflow()

    def _build_workflow_uncompiled(self) -> StateGraph:
        """
        Build the experiment workflow (uncompiled version for visualization).

        Returns:
            Uncompiled StateGraph instance ready for visualization or compilation.
        """
        workflow = StateGraph(ExperimentState)

        workflow.add_node("load_instance", self.builder.create_node(load_instance))
        workflow.add_node("build_reachability_graph", self.builder.create_node(build_reachability_graph))
        workflow.add_node("run_trials", self.builder.create_node(run_trials))
        workflow.add_node("summarize_trials", self.builder.create_node(summarize_trials))

        workflow.set_entry_point("load_instance")

        # Street networks go through the reachability step first
        workflow.add_conditional_edges(
            "load_instance",
            route_after_load,
            {
                "build_reachability_graph": "build_reachability_graph",
                "run_trials": "run_trials"
            }
        )
        workflow.add_edge("build_reachability_graph", "run_trials")
        workflow.add_edge("run_trials", "summarize_trials")
        workflow.add_edge("summarize_trials", END)

        return workflow

    def _build_workflow(self):
        compiled = self._build_workflow_uncompiled().compile()
        if os.getenv("LANGCHAIN_TRACING_V2", "false").lower() == "true":
            print("Tracing enabled (LangSmith compatible)", file=sys.stderr)
        return compiled

    def get_graph(self) -> StateGraph:
        """Uncompiled workflow, for visualization."""
        return self._build_workflow_uncompiled()

    def run(self, plan: ExperimentPlan) -> TrialStats:
        """
        Execute one plan.

        Raises:
            OSError / GraphFormatError: The instance cannot be loaded.
            InfeasibleSolutionError: A solver returned an infeasible set.
            BudgetExhaustedError: The exact method ran out of nodes.
        """
        initial_state: ExperimentState = {
            "plan": plan,
            "graph": None,
            "street_network": None,
            "trials": [],
            "stats": None,
            "verbose": self.verbose,
        }
        if self.verbose:
            print(f"\n{'=' * 60}", file=sys.stderr)
            print(f"Experiment: {plan.method} k={plan.k} b={plan.beam_width} on {plan.graph_path}",
                  file=sys.stderr)
            print(f"{'=' * 60}\n", file=sys.stderr)

        final_state = self.workflow.invoke(initial_state)
        return final_state["stats"]


def run_experiment(plan: ExperimentPlan) -> TrialStats:
    """Run a single plan with a fresh runner."""
    return ExperimentRunner(node_budget=plan.node_budget or DEFAULT_NODE_BUDGET).run(plan)
