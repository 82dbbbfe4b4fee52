"""
Evaluation metrics for the k-domination heuristics on a synthetic ensemble.

This script builds an ensemble of random geometric graphs (a stand-in for
street reachability graphs) and collects:
- Coverage-greedy vs standard-greedy solution sizes for k = 1, 2, 4
- Beam-search sizes for widths 1, 2, 4 at k = 2
- Single-solve throughput of the coverage greedy on a larger graph

Usage:
    python evaluation_metrics.py                  # 20 graphs, n=1000, 10 seeds
    python evaluation_metrics.py --graphs 4 --n 300 --seeds 3
"""
import argparse
import json
import time
from datetime import datetime
from typing import Any, Dict, List

import numpy as np
from dotenv import load_dotenv

from src.config import DEFAULT_SEED, SolveConfig
from src.graph_core import Graph
from src.instances import random_geometric
from src.registry import SolverRegistry
from src.workflow import derive_seeds

load_dotenv()


class MetricsCollector:
    """Collects per-graph mean solution sizes and aggregates them."""

    def __init__(self):
        self.metrics: Dict[str, Any] = {
            "graphs": 0,
            "mean_sizes": {},
            "throughput_s": None,
        }

    def collect_graph_metrics(self, label: str, sizes: List[int]):
        """
        Record the sizes of one (method, k, b) configuration on one graph.

        Args:
            label: Configuration key, e.g. "greedy k=2" or "beam k=2 b=4".
            sizes: |D| for every seed.
        """
        self.metrics["mean_sizes"].setdefault(label, []).append(float(np.mean(sizes)))

    def reduction(self, method_label: str, baseline_label: str) -> Dict[str, float]:
        """Ensemble-mean reduction (%) of ``method_label`` against ``baseline_label``."""
        ours = np.asarray(self.metrics["mean_sizes"][method_label])
        base = np.asarray(self.metrics["mean_sizes"][baseline_label])
        return {
            "reduction_percent": round(float(100.0 * (base.mean() - ours.mean()) / base.mean()), 3),
            "graphs_better": int((ours < base).sum()),
            "graphs": int(ours.size),
        }

    def get_summary(self) -> Dict[str, Any]:
        """Get summary of all collected metrics."""
        sizes = self.metrics["mean_sizes"]
        summary: Dict[str, Any] = {
            "ensemble_means": {label: round(float(np.mean(v)), 3) for label, v in sizes.items()},
            "greedy_vs_standard": {},
            "beam_trend": {},
            "throughput_s": self.metrics["throughput_s"],
        }
        for k in (1, 2, 4):
            if f"greedy k={k}" in sizes and f"standard k={k}" in sizes:
                summary["greedy_vs_standard"][f"k={k}"] = self.reduction(f"greedy k={k}", f"standard k={k}")
        widths = sorted(int(label.rsplit("=", 1)[1]) for label in sizes if label.startswith("beam"))
        for narrow, wide in zip(widths, widths[1:]):
            summary["beam_trend"][f"b={wide} vs b={narrow}"] = self.reduction(
                f"beam k=2 b={wide}", f"beam k=2 b={narrow}"
            )
        return summary

    def print_summary(self):
        """Print formatted summary of metrics."""
        summary = self.get_summary()

        print("\n" + "=" * 70)
        print("EVALUATION METRICS SUMMARY")
        print("=" * 70)

        print("\n📊 Ensemble mean |D|:")
        for label, value in summary["ensemble_means"].items():
            print(f"  {label}: {value}")

        print("\n📈 Coverage greedy vs standard greedy:")
        for k, row in summary["greedy_vs_standard"].items():
            print(f"  {k}: {row['reduction_percent']}% smaller, "
                  f"better on {row['graphs_better']}/{row['graphs']} graphs")

        print("\n🔧 Beam width trend (k=2):")
        for key, row in summary["beam_trend"].items():
            print(f"  {key}: {row['reduction_percent']}% smaller")

        if summary["throughput_s"] is not None:
            print(f"\n⏱  Greedy single solve: {summary['throughput_s']:.3f} s")
        print("\n" + "=" * 70)


def run_configuration(solvers: SolverRegistry, graph: Graph, method: str, k: int,
                      seeds: List[int], beam_width: int = 1) -> List[int]:
    """One solve per seed; returns the sizes."""
    return [
        len(solvers.solve(method, graph, SolveConfig(k=k, seed=seed, beam_width=beam_width)))
        for seed in seeds
    ]


def run_evaluation(n_graphs: int, n: int, mean_degree: float, n_seeds: int,
                   throughput_n: int) -> MetricsCollector:
    """Run the ensemble protocol and collect metrics."""
    collector = MetricsCollector()
    solvers = SolverRegistry()
    seeds = derive_seeds(DEFAULT_SEED, n_seeds)

    print("=" * 70)
    print("RUNNING ENSEMBLE")
    print("=" * 70)

    for i in range(n_graphs):
        graph = random_geometric(n, mean_degree, seed=DEFAULT_SEED + i)
        print(f"\n--- Graph {i + 1}/{n_graphs}: {graph.n} vertices, {graph.edge_count} edges")
        collector.metrics["graphs"] += 1
        for k in (1, 2, 4):
            for method in ("greedy", "standard"):
                sizes = run_configuration(solvers, graph, method, k, seeds)
                collector.collect_graph_metrics(f"{method} k={k}", sizes)
                print(f"  ✓ {method} k={k}: mean {np.mean(sizes):.2f}")
        for b in (1, 2, 4):
            sizes = run_configuration(solvers, graph, "beam", 2, seeds, beam_width=b)
            collector.collect_graph_metrics(f"beam k=2 b={b}", sizes)
            print(f"  ✓ beam k=2 b={b}: mean {np.mean(sizes):.2f}")

    if throughput_n:
        graph = random_geometric(throughput_n, mean_degree, seed=DEFAULT_SEED)
        start = time.perf_counter()
        solvers.solve("greedy", graph, SolveConfig(k=2, seed=DEFAULT_SEED))
        collector.metrics["throughput_s"] = time.perf_counter() - start

    return collector


def main():
    """Main evaluation function."""
    parser = argparse.ArgumentParser(description="Ensemble evaluation of the k-domination heuristics")
    parser.add_argument("--graphs", type=int, default=20)
    parser.add_argument("--n", type=int, default=1000)
    parser.add_argument("--mean-degree", type=float, default=40.0)
    parser.add_argument("--seeds", type=int, default=10)
    parser.add_argument("--throughput-n", type=int, default=2000, help="0 skips the timing run")
    parser.add_argument("--output", default="evaluation_results.json")
    args = parser.parse_args()

    collector = run_evaluation(args.graphs, args.n, args.mean_degree, args.seeds, args.throughput_n)
    collector.print_summary()

    with open(args.output, "w") as f:
        json.dump({
            "timestamp": datetime.now().isoformat(),
            "parameters": vars(args),
            "metrics": collector.get_summary(),
            "raw_metrics": collector.metrics,
        }, f, indent=2)

    print(f"\n✓ Results saved to: {args.output}")
    print("\n" + "=" * 70)


if __name__ == "__main__":
    main()
