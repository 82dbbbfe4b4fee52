"""
Edge and routing functions for the LangGraph workflows.

All routers follow the pattern:
    (state) -> Literal[str, ...]

They return string literals that map to node names in the workflow.
"""
from .routers import (
    route_after_beam_check,
    route_after_load
)

__all__ = [
    "route_after_beam_check",
    "route_after_load",
]
