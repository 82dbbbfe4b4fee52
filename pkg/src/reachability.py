"""
Reachability graphs of street networks.

Given a street network G^s with edge lengths in meters and a threshold t,
the reachability graph G^r_t has the same vertices and an edge u-v exactly
when the shortest-path distance between u and v in G^s is strictly less than
t. Facilities placed on a k-dominating set of G^r_t leave every location
with at least k facilities closer than t meters along the streets.

Each source runs a Dijkstra search bounded at t (networkx stops expanding
once the frontier passes the cutoff). Sources are independent, so they may
be searched on a thread pool; results are merged in source order, so the
output never depends on completion order.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Tuple

import networkx as nx

from src.graph_core import Graph, StreetNetwork


@dataclass(frozen=True)
class ReachabilityConfig:
    """
    Attributes:
        threshold_t: Reachability threshold in meters, strictly positive.
        workers: Threads used for the per-source searches (1 = sequential).
    """
    threshold_t: float
    workers: int = 1

    def __post_init__(self):
        if not self.threshold_t > 0:
            raise ValueError(f"threshold_t must be > 0 meters, got {self.threshold_t!r}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers!r}")


def _reachable_from(nx_graph: nx.Graph, source: int, threshold: float) -> List[Tuple[int, int]]:
    # cutoff keeps distances <= t; the strict comparison below drops ties at exactly t
    distances = nx.single_source_dijkstra_path_length(
        nx_graph, source, cutoff=threshold, weight="weight"
    )
    return [(source, target) for target, dist in distances.items()
            if target > source and dist < threshold]


def build_reachability(network: StreetNetwork, cfg: ReachabilityConfig) -> Graph:
    """
    Build G^r_t from a street network.

    Distances are compared in double precision with no tolerance. Pairs in
    different components never get an edge.

    Returns:
        Graph on the same vertices and labels as ``network.graph``.
    """
    nx_graph = network.to_networkx()
    sources = range(network.graph.n)

    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            per_source = list(pool.map(
                lambda s: _reachable_from(nx_graph, s, cfg.threshold_t), sources
            ))
    else:
        per_source = [_reachable_from(nx_graph, s, cfg.threshold_t) for s in sources]

    edges = [edge for found in per_source for edge in found]
    return Graph.from_edges(network.graph.labels, edges)
