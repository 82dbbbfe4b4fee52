"""
Node implementations for the LangGraph workflows.

- beam_nodes: expansion, ranking and feasibility check of the beam search
- experiment_nodes: instance loading, reachability, trials and summary

All nodes follow a functional pattern:
    (state, ...dependencies) -> state

Dependencies are explicitly declared in function signatures, making it clear
what tools each node requires to operate.
"""
from .beam_nodes import (
    check_beam,
    expand_beam,
    rank_beam
)
from .experiment_nodes import (
    build_reachability_graph,
    load_instance,
    run_trials,
    summarize_trials
)

__all__ = [
    "check_beam",
    "expand_beam",
    "rank_beam",
    "load_instance",
    "build_reachability_graph",
    "run_trials",
    "summarize_trials",
]
