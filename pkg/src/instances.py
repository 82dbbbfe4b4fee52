"""
Synthetic benchmark instances.

- random_geometric: points in the unit square joined when closer than a
  radius chosen for a target mean degree. Stand-in for reachability graphs.
- erdos_renyi: G(n, p).
- street_grid: a jittered rectangular street grid with some blocks merged
  (edges dropped), lengths in meters. Feed it to build_reachability.

All generators are deterministic given their seed.
"""
import math
from typing import Dict, Tuple

import networkx as nx
import numpy as np

from src.graph_core import Graph, StreetNetwork


def geometric_radius(n: int, mean_degree: float) -> float:
    """Radius giving roughly ``mean_degree`` neighbours per point, ignoring the border."""
    if n < 2:
        return 0.0
    return math.sqrt(mean_degree / (math.pi * (n - 1)))


def random_geometric(n: int, mean_degree: float, seed: int) -> Graph:
    """Random geometric graph on n points labelled 0..n-1."""
    if n < 0 or mean_degree < 0:
        raise ValueError("n and mean_degree must be non-negative")
    return Graph.from_networkx(
        nx.random_geometric_graph(n, geometric_radius(n, mean_degree), seed=seed)
    )


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p) labelled 0..n-1."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p!r}")
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def street_grid(
    rows: int,
    cols: int,
    seed: int,
    spacing_m: float = 100.0,
    jitter: float = 0.2,
    drop: float = 0.1
) -> StreetNetwork:
    """
    Jittered street grid.

    Args:
        rows, cols: Intersections per column and per row.
        seed: Seed for the jitter and the dropped edges.
        spacing_m: Nominal block length in meters.
        jitter: Maximum displacement of an intersection, as a fraction of
            the spacing; below 0.5 so every length stays positive.
        drop: Probability that a street segment is removed.

    Returns:
        StreetNetwork with vertices labelled "r_c" and lengths equal to the
        Euclidean distance between the displaced intersections, rounded to
        centimeters.
    """
    if rows < 1 or cols < 1:
        raise ValueError("rows and cols must be positive")
    if not 0.0 <= jitter < 0.5:
        raise ValueError(f"jitter must lie in [0, 0.5), got {jitter!r}")
    if not 0.0 <= drop < 1.0:
        raise ValueError(f"drop must lie in [0, 1), got {drop!r}")

    rng = np.random.default_rng(seed)
    grid = nx.grid_2d_graph(rows, cols)
    nodes = sorted(grid.nodes())
    position = {node: i for i, node in enumerate(nodes)}
    offsets = rng.uniform(-jitter, jitter, size=(len(nodes), 2)) * spacing_m
    coords = np.array(nodes, dtype=float) * spacing_m + offsets

    edges = sorted((min(position[a], position[b]), max(position[a], position[b]))
                   for a, b in grid.edges())
    kept = np.asarray(edges, dtype=np.int64).reshape(-1, 2)[rng.random(len(edges)) >= drop]

    lengths: Dict[Tuple[int, int], float] = {}
    for u, v in kept:
        lengths[(int(u), int(v))] = round(float(np.linalg.norm(coords[u] - coords[v])), 2)

    graph = Graph.from_edges([f"{r}_{c}" for r, c in nodes], lengths.keys())
    return StreetNetwork(graph=graph, lengths=lengths)
