"""
Command-line front end: ``python kdom.py <command> ...``.

Commands:
    reach     build the reachability graph of a weighted street network
    solve     one heuristic solve, printed as size and sorted labels
    bench     multi-seed experiments, reported as CSV or an aligned table
    exact     minimum k-dominating set of a small graph
    verify    check a given vertex set
    stats     vertex/edge/degree/length statistics of an edge list
    generate  write a synthetic instance

Exit codes:
    0  success (verify: FEASIBLE)
    1  verify: INFEASIBLE
    2  usage, I/O or parse error, exact search out of budget in bench
    3  a solver returned an infeasible set (bug)
"""
import argparse
import sys
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from src.config import (
    DEFAULT_N_SEEDS,
    DEFAULT_NODE_BUDGET,
    DEFAULT_SEED,
    SEED_MASK,
    SolveConfig,
    verbose_enabled,
)
from src.coverage import CoverageState, verify_k_dominating
from src.errors import BudgetExhaustedError, GraphFormatError, InfeasibleSolutionError
from src.exact import exact_min_k_dominating
from src.graph_core import Graph, StreetNetwork, read_graph_file, write_edge_list
from src.instances import erdos_renyi, random_geometric, street_grid
from src.reachability import ReachabilityConfig, build_reachability
from src.registry import SolverRegistry
from src.report import emit_report
from src.state import ExperimentPlan
from src.workflow import ExperimentRunner, derive_seeds

HEURISTICS = ("greedy", "beam", "standard", "couture")
BENCH_METHODS = HEURISTICS + ("exact",)


class CliError(Exception):
    """Aborts a command with an exit code and a message for stderr."""

    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _positive_int(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {raw!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _positive_float(raw: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {raw!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {raw}")
    return value


def _seed(raw: str) -> int:
    if raw == "random":
        return int(np.random.SeedSequence().entropy) & SEED_MASK
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a 64-bit integer or 'random', got {raw!r}")
    if not 0 <= value <= SEED_MASK:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 bits, got {raw}")
    return value


def _csv_list(raw: str) -> List[str]:
    return [item.strip() for item in raw.split(",") if item.strip()]


def _read(path: str, weighted: bool = False) -> Union[Graph, StreetNetwork]:
    try:
        return read_graph_file(path, weighted=weighted)
    except OSError as e:
        raise CliError(2, f"cannot read {path}: {e.strerror or e}")
    except UnicodeDecodeError:
        raise CliError(2, f"{path}: not UTF-8 text")
    except GraphFormatError as e:
        raise CliError(2, f"{path}: {e}")


def _write(path: str, data: bytes) -> None:
    try:
        with open(path, "wb") as handle:
            handle.write(data)
    except OSError as e:
        raise CliError(2, f"cannot write {path}: {e.strerror or e}")


def _sorted_labels(graph: Graph, members: Sequence[int]) -> List[str]:
    return sorted(graph.labels[v] for v in members)


def _verified(graph: Graph, k: int, members: Tuple[int, ...], method: str) -> Tuple[int, ...]:
    if not verify_k_dominating(graph, k, members):
        raise InfeasibleSolutionError(f"{method} returned a set that is not {k}-dominating")
    return members


def _verbose(args: argparse.Namespace) -> bool:
    return args.verbose or verbose_enabled()


def cmd_reach(args: argparse.Namespace) -> int:
    network = _read(args.input, weighted=True)
    graph = build_reachability(network, ReachabilityConfig(args.threshold, workers=args.workers))
    _write(args.output, write_edge_list(graph))
    print(f"{graph.n} vertices, {graph.edge_count} edges")
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    if args.beam_width is not None and args.method != "beam":
        raise CliError(2, "--beam-width is only valid with --method beam")
    graph = _read(args.input)
    cfg = SolveConfig(k=args.k, seed=args.seed, beam_width=args.beam_width or 1,
                      verbose=_verbose(args))
    members = _verified(graph, args.k, SolverRegistry().solve(args.method, graph, cfg), args.method)
    print(f"size {len(members)}")
    print(" ".join(_sorted_labels(graph, members)))
    return 0


def _bench_plans(args: argparse.Namespace) -> List[ExperimentPlan]:
    methods = _csv_list(args.methods)
    unknown = [m for m in methods if m not in BENCH_METHODS]
    if not methods or unknown:
        raise CliError(2, f"--methods must list some of {', '.join(BENCH_METHODS)}; got {args.methods!r}")
    if args.beam_widths is not None and "beam" not in methods:
        raise CliError(2, "--beam-widths is only valid when --methods includes beam")
    try:
        widths = [_positive_int(w) for w in _csv_list(args.beam_widths or "1")]
    except argparse.ArgumentTypeError as e:
        raise CliError(2, f"--beam-widths: {e}")

    seeds = tuple(derive_seeds(args.master_seed, args.n_seeds))
    plans = []
    for path in args.input:
        for method in methods:
            for width in (widths if method == "beam" else [None]):
                plans.append(ExperimentPlan(
                    graph_path=path,
                    method=method,
                    k=args.k,
                    seeds=seeds,
                    beam_width=width,
                    threshold_t=args.threshold,
                    serial_timing=args.serial_timing,
                    workers=args.workers,
                    node_budget=args.node_budget,
                ))
    return plans


def cmd_bench(args: argparse.Namespace) -> int:
    plans = _bench_plans(args)
    runner = ExperimentRunner(node_budget=args.node_budget, verbose=_verbose(args))
    stats = []
    for plan in plans:
        try:
            stats.append(runner.run(plan))
        except OSError as e:
            raise CliError(2, f"cannot read {plan.graph_path}: {e.strerror or e}")
        except GraphFormatError as e:
            raise CliError(2, f"{plan.graph_path}: {e}")
        except BudgetExhaustedError as e:
            raise CliError(2, f"{plan.graph_path}: {e}; raise --node-budget")
    sys.stdout.write(emit_report(stats, args.format).decode("utf-8"))
    return 0


def cmd_exact(args: argparse.Namespace) -> int:
    graph = _read(args.input)
    result = exact_min_k_dominating(graph, args.k, budget=args.node_budget)
    if not result.is_optimal:
        print("unknown (budget exhausted)")
        return 0
    witness = _verified(graph, args.k, result.witness, "exact")
    labels = _sorted_labels(graph, witness)
    print(f"optimum {result.optimum_size}" + (f": {' '.join(labels)}" if labels else ""))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    graph = _read(args.input)
    members = []
    for label in _csv_list(args.set):
        if not graph.has_label(label):
            raise CliError(2, f"unknown vertex label {label!r}")
        members.append(graph.index_of(label))
    state = CoverageState.from_members(graph, args.k, sorted(set(members)))
    if state.is_k_dominating():
        print("FEASIBLE")
        return 0
    violations = sorted((graph.labels[v], cov) for v, cov in state.violations())
    print("INFEASIBLE: " + ", ".join(f"{label} cov={cov}" for label, cov in violations))
    return 1


def cmd_stats(args: argparse.Namespace) -> int:
    loaded = _read(args.input, weighted=args.weighted)
    graph = loaded.graph if isinstance(loaded, StreetNetwork) else loaded
    degrees = graph.degrees
    print(f"vertices {graph.n}")
    print(f"edges {graph.edge_count}")
    if graph.n:
        print(f"min_degree {int(degrees.min())}")
        print(f"mean_degree {float(degrees.mean()):.4f}")
        print(f"max_degree {int(degrees.max())}")
    if isinstance(loaded, StreetNetwork):
        print(f"total_length_m {sum(loaded.lengths.values()):.2f}")
    return 0


def cmd_generate(args: argparse.Namespace) -> int:
    if args.kind == "geometric":
        instance = random_geometric(args.n, args.mean_degree, args.seed)
    elif args.kind == "er":
        instance = erdos_renyi(args.n, args.p, args.seed)
    else:
        instance = street_grid(args.rows, args.cols, args.seed, spacing_m=args.spacing,
                               jitter=args.jitter, drop=args.drop)
    _write(args.output, write_edge_list(instance))
    graph = instance.graph if isinstance(instance, StreetNetwork) else instance
    print(f"{graph.n} vertices, {graph.edge_count} edges")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kdom",
        description="Small k-dominating sets: heuristics, baselines, exact search and benchmarks",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python3 kdom.py reach --input streets.txt --threshold 500 --output reach.txt
  python3 kdom.py solve --input reach.txt --k 2 --method beam --beam-width 4
  python3 kdom.py bench --input reach.txt --k 2 --methods greedy,beam,standard,couture --beam-widths 1,2,4
  python3 kdom.py verify --input path.txt --k 2 --set a,c
        """
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--verbose", action="store_true", help="progress output on stderr")
        return p

    p = command("reach", "build the reachability graph of a street network")
    p.add_argument("--input", required=True, help="weighted edge list (u v meters)")
    p.add_argument("--threshold", required=True, type=_positive_float, help="t in meters")
    p.add_argument("--output", required=True, help="unweighted edge list to write")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.set_defaults(handler=cmd_reach)

    p = command("solve", "run one heuristic")
    p.add_argument("--input", required=True)
    p.add_argument("--k", required=True, type=_positive_int)
    p.add_argument("--method", required=True, choices=HEURISTICS)
    p.add_argument("--beam-width", type=_positive_int, default=None)
    p.add_argument("--seed", type=_seed, default=DEFAULT_SEED, help="64-bit seed or 'random'")
    p.set_defaults(handler=cmd_solve)

    p = command("bench", "multi-seed experiments")
    p.add_argument("--input", required=True, nargs="+")
    p.add_argument("--k", required=True, type=_positive_int)
    p.add_argument("--methods", required=True, help="comma-separated: " + ",".join(BENCH_METHODS))
    p.add_argument("--beam-widths", default=None, help="comma-separated, e.g. 1,2,4")
    p.add_argument("--n-seeds", type=_positive_int, default=DEFAULT_N_SEEDS)
    p.add_argument("--master-seed", type=_seed, default=DEFAULT_SEED)
    p.add_argument("--format", choices=("csv", "table"), default="csv")
    p.add_argument("--serial-timing", action="store_true",
                   help="run trials one at a time even with --workers > 1")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--threshold", type=_positive_float, default=None,
                   help="inputs are street networks; bench their reachability graphs")
    p.add_argument("--node-budget", type=_positive_int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(handler=cmd_bench)

    p = command("exact", "minimum k-dominating set by exhaustive search")
    p.add_argument("--input", required=True)
    p.add_argument("--k", required=True, type=_positive_int)
    p.add_argument("--node-budget", type=_positive_int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(handler=cmd_exact)

    p = command("verify", "check a vertex set")
    p.add_argument("--input", required=True)
    p.add_argument("--k", required=True, type=_positive_int)
    p.add_argument("--set", required=True, help="comma-separated vertex labels")
    p.set_defaults(handler=cmd_verify)

    p = command("stats", "graph statistics")
    p.add_argument("--input", required=True)
    p.add_argument("--weighted", action="store_true", help="input is a street network")
    p.set_defaults(handler=cmd_stats)

    p = command("generate", "write a synthetic instance")
    p.add_argument("--kind", required=True, choices=("geometric", "er", "grid"))
    p.add_argument("--output", required=True)
    p.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    p.add_argument("--n", type=int, default=200, help="vertices (geometric, er)")
    p.add_argument("--mean-degree", type=float, default=8.0, help="geometric")
    p.add_argument("--p", type=float, default=0.05, help="edge probability (er)")
    p.add_argument("--rows", type=_positive_int, default=20, help="grid")
    p.add_argument("--cols", type=_positive_int, default=20, help="grid")
    p.add_argument("--spacing", type=_positive_float, default=100.0, help="grid block length (m)")
    p.add_argument("--jitter", type=float, default=0.2, help="grid")
    p.add_argument("--drop", type=float, default=0.1, help="grid")
    p.set_defaults(handler=cmd_generate)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv`` and run the command; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        return args.handler(args)
    except CliError as e:
        print(f"✗ Error: {e}", file=sys.stderr)
        return e.code
    except ValueError as e:
        print(f"✗ Error: {e}", file=sys.stderr)
        return 2
    except InfeasibleSolutionError as e:
        print(f"✗ Solver error: {e}", file=sys.stderr)
        return 3
