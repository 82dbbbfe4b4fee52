"""
Workflow builder with automatic dependency injection.

Workflow nodes are plain functions ``node(state, dep1: Type1, ...) -> state``.
WorkflowBuilder reads each node's signature and type hints, looks the hinted
class names up in a registry, and returns a ``node(state)`` wrapper with the
dependencies bound, which is what LangGraph's ``add_node`` expects.

Example:
    .. code-block:: python

        builder = WorkflowBuilder({
            "MemberSignatures": MemberSignatures(graph.n),
            "SolveConfig": cfg,
            "Generator": np.random.default_rng(cfg.seed),
        })
        workflow.add_node("rank_beam", builder.create_node(rank_beam))
"""
from functools import wraps
from inspect import signature
from typing import Any, Callable, Dict, get_type_hints


def _type_name(hint: Any) -> str:
    if isinstance(hint, str):
        return hint.rsplit(".", 1)[-1]
    name = getattr(hint, "__name__", None)
    if name is not None:
        return name
    return str(hint).replace("'", "").rsplit(".", 1)[-1]


class WorkflowBuilder:
    """
    Binds registered dependencies to node functions by type-hint class name.

    Attributes:
        dependencies: Class name -> instance, e.g. {"SolveConfig": cfg}.
    """

    def __init__(self, dependencies: Dict[str, Any]):
        if not dependencies:
            raise ValueError("Dependencies dictionary cannot be empty")
        self.dependencies = dict(dependencies)

    def resolve(self, node_func: Callable) -> Dict[str, Any]:
        """
        Map every non-state parameter of ``node_func`` to its dependency.

        Raises:
            TypeError: A parameter has no type hint.
            ValueError: A hinted class is missing from the registry.
        """
        hints = get_type_hints(node_func)
        resolved: Dict[str, Any] = {}
        missing = []
        for param_name in signature(node_func).parameters:
            if param_name == "state":
                continue
            if param_name not in hints:
                raise TypeError(
                    f"Node function {node_func.__name__} parameter '{param_name}' "
                    f"must have type hint"
                )
            type_name = _type_name(hints[param_name])
            if type_name in self.dependencies:
                resolved[param_name] = self.dependencies[type_name]
            else:
                missing.append(f"{param_name}: {type_name}")
        if missing:
            raise ValueError(
                f"Node {node_func.__name__} requires dependencies not in registry:\n"
                f"  Missing: {', '.join(missing)}\n"
                f"  Available: {', '.join(self.dependencies)}"
            )
        return resolved

    def create_node(self, node_func: Callable) -> Callable:
        """Return ``wrapper(state)`` calling ``node_func`` with its dependencies."""
        node_deps = self.resolve(node_func)

        @wraps(node_func)
        def wrapper(state):
            return node_func(state, **node_deps)

        return wrapper
