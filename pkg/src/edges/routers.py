"""
Routing functions for conditional edges in the LangGraph workflows.

All routing functions follow the pattern:
    (state) -> Literal[str, ...]

They return string literals that map to node names in the workflow graph.
These return values must match the node names exactly for proper routing.
"""
from typing import Literal

from langgraph.graph import END

from src.config import progress
from src.state import BeamState, ExperimentState


def route_after_beam_check(state: BeamState) -> Literal["expand_beam", "__end__"]:
    """
    Stop the beam search once a retained entry is k-dominating.

    Args:
        state: Beam-search state after check_beam:
            - solution: PartialSolution or None

    Returns:
        - END: check_beam found a feasible entry among the top b
        - "expand_beam": otherwise, run another round

    Example Usage:
        Input: {"solution": None, "round": 0, ...}   (n > 0)
        Output: "expand_beam"
    """
    if state["solution"] is not None:
        progress(
            f"→ ROUTING: feasible entry after round {state['round']} → END\n"
            f"  Size: {len(state['solution'].members)}",
            state["verbose"],
        )
        return END
    progress(
        f"→ ROUTING: no feasible entry after round {state['round']} → 'expand_beam'",
        state["verbose"],
    )
    return "expand_beam"


def route_after_load(
    state: ExperimentState
) -> Literal["build_reachability_graph", "run_trials"]:
    """
    Send street networks through the reachability step first.

    Returns:
        - "build_reachability_graph": the plan names a threshold, so the
          loaded file is a weighted street network
        - "run_trials": the loaded file is already the instance
    """
    if state["plan"].threshold_t is not None:
        progress(
            f"→ ROUTING: threshold {state['plan'].threshold_t} m → 'build_reachability_graph'",
            state["verbose"],
        )
        return "build_reachability_graph"
    progress("→ ROUTING: plain edge list → 'run_trials'", state["verbose"])
    return "run_trials"
