"""
Example usage of the k-domination toolkit on the three-vertex path a-b-c.

With k = 2:
- the coverage greedy picks b first (largest gain) and ends with {a, b, c};
- beam search with width 1 behaves like the greedy; with width 3 it keeps
  {a} and {c} alive and finds {a, c};
- exhaustive search confirms that 2 is optimal.

For more, see:
- kdom.py - Command-line interface
- tests/ - Test suite
"""
from dotenv import load_dotenv

from src.beam_search import BeamSearch
from src.config import SolveConfig
from src.coverage import CoverageState
from src.exact import exact_min_k_dominating
from src.graph_core import load_edge_list
from src.greedy import greedy_k_domination


def run_example():
    """Walk through the path example."""
    load_dotenv()

    print("=" * 60)
    print("k-domination on the path a-b-c, k = 2")
    print("=" * 60)
    print()

    graph = load_edge_list("a b\nb c\n")
    names = lambda members: "{" + ", ".join(graph.labels[v] for v in members) + "}"

    print("Example 1: gains with D = {a}")
    print("-" * 60)
    state = CoverageState.from_members(graph, 2, [graph.index_of("a")])
    for label in ("b", "c"):
        print(f"  delta({label}) = {state.delta(graph.index_of(label))}")
    print()

    print("Example 2: coverage greedy")
    print("-" * 60)
    trace = []
    members = greedy_k_domination(graph, SolveConfig(k=2), trace=trace)
    for step, (candidates, chosen) in enumerate(trace, 1):
        print(f"  step {step}: argmax {names(candidates)} -> add {graph.labels[chosen]}")
    print(f"  result {names(members)}")
    print()

    print("Example 3: beam search")
    print("-" * 60)
    for width in (1, 3):
        solution = BeamSearch(graph, SolveConfig(k=2, beam_width=width)).run()
        print(f"  b={width}: {names(solution.members)}")
    print()

    print("Example 4: exact optimum")
    print("-" * 60)
    result = exact_min_k_dominating(graph, 2)
    print(f"  optimum {result.optimum_size}: {names(result.witness)}")
    print()

    print("=" * 60)
    print("For more examples, use: python3 kdom.py --help")
    print("=" * 60)


if __name__ == "__main__":
    run_example()
