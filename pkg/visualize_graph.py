"""
Visualize the LangGraph workflows (beam search and experiment runner).
"""
from dotenv import load_dotenv

from src.beam_search import BeamSearch
from src.config import SolveConfig
from src.graph_core import load_edge_list
from src.workflow import ExperimentRunner


def show(name: str, graph) -> None:
    """Print ASCII and Mermaid drawings of one compiled workflow graph."""
    print("\n" + "=" * 60)
    print(f"{name} Workflow")
    print("=" * 60 + "\n")

    print("ASCII Graph Structure:")
    print("-" * 60)
    try:
        graph.print_ascii()
    except (AttributeError, ImportError) as e:
        if "grandalf" in str(e):
            print("(ASCII visualization requires 'grandalf' package)")
            print("  Install with: pip install grandalf")
        else:
            print("(ASCII visualization not available in this version)")
    print()

    print("Mermaid Diagram:")
    print("-" * 60)
    mermaid_diagram = graph.draw_mermaid()
    print(mermaid_diagram)

    mermaid_file = f"{name.lower().replace(' ', '_')}_workflow.mmd"
    with open(mermaid_file, "w") as f:
        f.write(mermaid_diagram)
    print(f"\n✓ Saved Mermaid diagram to {mermaid_file}")
    print("  You can view it at https://mermaid.live/ or in any Mermaid-compatible viewer")


def visualize_graph():
    """Generate visualizations of both workflows."""
    load_dotenv()

    path = load_edge_list("a b\nb c\n")
    show("Beam Search", BeamSearch(path, SolveConfig(k=2, beam_width=3)).workflow.get_graph())
    show("Experiment", ExperimentRunner(verbose=False).workflow.get_graph())


if __name__ == "__main__":
    visualize_graph()
