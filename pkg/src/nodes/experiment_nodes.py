"""
Experiment-runner nodes.

An experiment loads one instance, optionally turns a street network into its
reachability graph, runs one solve per seed and summarizes the sizes and
solve times:

    load_instance -> [build_reachability_graph] -> run_trials -> summarize_trials
"""
import os
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict

from src.config import SolveConfig, progress
from src.coverage import verify_k_dominating
from src.errors import InfeasibleSolutionError
from src.reachability import ReachabilityConfig, build_reachability
from src.registry import InstanceLoader, SolverRegistry
from src.report import summarize
from src.state import ExperimentState


def load_instance(state: ExperimentState, loader: InstanceLoader) -> ExperimentState:
    """
    Read the plan's edge list.

    State Modifications:
        - With a threshold: sets state["street_network"] (weighted parse).
        - Otherwise: sets state["graph"].
    """
    plan = state["plan"]
    if plan.threshold_t is not None:
        network = loader.load(plan.graph_path, weighted=True)
        state["street_network"] = network
        graph = network.graph
    else:
        graph = loader.load(plan.graph_path)
        state["graph"] = graph
    progress(
        f"✓ NODE: load_instance\n"
        f"  {plan.graph_path}: {graph.n} vertices, {graph.edge_count} edges",
        state["verbose"],
    )
    return state


def build_reachability_graph(state: ExperimentState) -> ExperimentState:
    """
    Replace the street network by its reachability graph for the plan's
    threshold. Not part of any trial's timing.

    State Modifications:
        - Sets state["graph"].
    """
    plan = state["plan"]
    cfg = ReachabilityConfig(threshold_t=plan.threshold_t, workers=plan.workers)
    state["graph"] = build_reachability(state["street_network"], cfg)
    progress(
        f"✓ NODE: build_reachability_graph\n"
        f"  t={plan.threshold_t} m: {state['graph'].n} vertices, "
        f"{state['graph'].edge_count} edges",
        state["verbose"],
    )
    return state


def run_trials(state: ExperimentState, solvers: SolverRegistry) -> ExperimentState:
    """
    One solve per seed. Each result is re-verified before it is recorded;
    a set that is not k-dominating aborts the experiment.

    Timing covers the solve call only. With plan.serial_timing off, up to
    plan.workers trials run at once; records stay in seed order.

    State Modifications:
        - Sets state["trials"] to [{"seed", "members", "size", "time_s"}, ...].

    Raises:
        InfeasibleSolutionError: A solver returned an infeasible set.
        BudgetExhaustedError: The exact method ran out of nodes.
    """
    plan = state["plan"]
    graph = state["graph"]
    solve = solvers.get(plan.method)

    def trial(seed: int) -> Dict[str, Any]:
        cfg = SolveConfig(k=plan.k, seed=seed, beam_width=plan.beam_width or 1,
                          verbose=state["verbose"])
        start = time.perf_counter()
        members = solve(graph, cfg)
        elapsed = time.perf_counter() - start
        if not verify_k_dominating(graph, plan.k, members):
            raise InfeasibleSolutionError(
                f"{plan.method} returned a set that is not {plan.k}-dominating (seed {seed})"
            )
        return {"seed": seed, "members": members, "size": len(members), "time_s": elapsed}

    if plan.serial_timing or plan.workers == 1:
        state["trials"] = [trial(seed) for seed in plan.seeds]
    else:
        with ThreadPoolExecutor(max_workers=plan.workers) as pool:
            state["trials"] = list(pool.map(trial, plan.seeds))

    progress(
        f"✓ NODE: run_trials\n"
        f"  {plan.method} k={plan.k}: sizes {[t['size'] for t in state['trials']]}",
        state["verbose"],
    )
    return state


def summarize_trials(state: ExperimentState) -> ExperimentState:
    """
    State Modifications:
        - Sets state["stats"] to the TrialStats of the run.
    """
    plan = state["plan"]
    state["stats"] = summarize(
        graph=os.path.basename(plan.graph_path),
        method=plan.method,
        k=plan.k,
        b=plan.beam_width,
        trials=state["trials"],
    )
    stats = state["stats"]
    progress(
        f"✓ NODE: summarize_trials\n"
        f"  min {stats.min_size}, mean {stats.mean_size:.4f}, stddev {stats.stddev_size:.4f}",
        state["verbose"],
    )
    return state
