"""
Shared graphs and brute-force oracles for the test suite.
"""
import os
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from src.coverage import verify_k_dominating
from src.graph_core import Graph, StreetNetwork, load_edge_list


def path_abc() -> Graph:
    """The path a-b-c."""
    return load_edge_list("a b\nb c\n")


def triangle() -> Graph:
    return load_edge_list("a b\na c\nb c\n")


def star(leaves: int = 3) -> Graph:
    return load_edge_list("".join(f"center leaf{i}\n" for i in range(leaves)))


def cycle(n: int) -> Graph:
    return Graph.from_networkx(nx.cycle_graph(n))


def edgeless(n: int) -> Graph:
    return Graph.from_edges([f"v{i}" for i in range(n)], [])


def random_corpus(count: int, max_n: int, seed: int, min_n: int = 1) -> List[Graph]:
    """Erdős–Rényi and random geometric graphs, alternating, from fixed seeds."""
    rng = np.random.default_rng(seed)
    graphs = []
    for i in range(count):
        n = int(rng.integers(min_n, max_n + 1))
        graph_seed = int(rng.integers(2**31))
        if i % 2 == 0:
            p = float(rng.uniform(0.05, 0.6))
            graphs.append(Graph.from_networkx(nx.gnp_random_graph(n, p, seed=graph_seed)))
        else:
            radius = float(rng.uniform(0.15, 0.6))
            graphs.append(Graph.from_networkx(nx.random_geometric_graph(n, radius, seed=graph_seed)))
    return graphs


def random_street_networks(count: int, max_n: int, seed: int) -> List[StreetNetwork]:
    """Random weighted graphs with uniform lengths in [1, 500) meters."""
    rng = np.random.default_rng(seed)
    networks = []
    for _ in range(count):
        n = int(rng.integers(2, max_n + 1))
        nx_graph = nx.gnp_random_graph(n, float(rng.uniform(0.05, 0.3)), seed=int(rng.integers(2**31)))
        graph = Graph.from_networkx(nx_graph)
        lengths = {edge: float(rng.uniform(1.0, 500.0)) for edge in graph.edges()}
        networks.append(StreetNetwork(graph=graph, lengths=lengths))
    return networks


def objective_from_scratch(graph: Graph, k: int, members: Sequence[int]) -> int:
    """Sum of min(k, |N(v) ∩ D|) over v outside D, with no incremental state."""
    inside = set(int(v) for v in members)
    total = 0
    for v in range(graph.n):
        if v not in inside:
            total += min(k, sum(1 for w in graph.adjacency[v] if w in inside))
    return total


def brute_force_minimum(graph: Graph, k: int) -> Tuple[int, Optional[Tuple[int, ...]]]:
    """Smallest k-dominating set by enumerating subsets in order of size."""
    for size in range(graph.n + 1):
        for subset in combinations(range(graph.n), size):
            if verify_k_dominating(graph, k, subset):
                return size, subset
    raise AssertionError("the full vertex set is always k-dominating")


def write_text(directory: str, name: str, text: str) -> str:
    """Write ``text`` to directory/name and return the path."""
    path = os.path.join(directory, name)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    return path
