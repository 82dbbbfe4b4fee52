"""
Immutable simple-graph representation and the edge-list file format.

All solvers work on dense vertex indices 0..n-1. External vertex names
(labels) are mapped to indices when a file is loaded and are only used again
when results are printed or written.

Edge-list format:
    UTF-8 text, one record per line, ``#`` starts a comment.
    ``u v``     an undirected edge between vertices named u and v
    ``u v w``   the same edge with a strictly positive length w in meters
                (weighted files only)
    ``u``       a vertex with no incident edge

Unweighted duplicate edge lines collapse to one edge. In weighted files a
duplicate line must repeat the same length; a different length is an error.
Self-loops are always rejected.
"""
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from src.errors import GraphFormatError


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..n-1.

    Attributes:
        n: Number of vertices.
        adjacency: For every vertex, the sorted tuple of its neighbours.
        labels: External name of every vertex.

    The constructor validates the invariants (no self-loops, no parallel
    edges, symmetric adjacency, unique labels) and builds a CSR copy of the
    adjacency (``indptr``/``indices``) plus a ``degrees`` array for the
    vectorized coverage code.
    """
    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    labels: Tuple[str, ...]
    indptr: np.ndarray = field(init=False, repr=False, compare=False)
    indices: np.ndarray = field(init=False, repr=False, compare=False)
    degrees: np.ndarray = field(init=False, repr=False, compare=False)
    _index: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self.check_invariants()
        degrees = np.fromiter((len(a) for a in self.adjacency), dtype=np.int64, count=self.n)
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(degrees, out=indptr[1:])
        indices = np.fromiter(
            (w for nbrs in self.adjacency for w in nbrs), dtype=np.int64, count=int(indptr[-1])
        )
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "indptr", indptr)
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "_index", {label: i for i, label in enumerate(self.labels)})

    @classmethod
    def from_edges(cls, labels: Sequence[str], edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build a graph from labels and index pairs; repeated pairs collapse."""
        n = len(labels)
        neighbours: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            neighbours[u].add(v)
            neighbours[v].add(u)
        return cls(
            n=n,
            adjacency=tuple(tuple(sorted(s)) for s in neighbours),
            labels=tuple(labels),
        )

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> "Graph":
        """Convert a networkx graph; node names become labels via ``str``."""
        nodes = list(nx_graph.nodes())
        position = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(
            [str(node) for node in nodes],
            ((position[u], position[v]) for u, v in nx_graph.edges() if u != v),
        )

    def check_invariants(self) -> None:
        """Raise ValueError if any simple-graph invariant is violated."""
        if len(self.adjacency) != self.n or len(self.labels) != self.n:
            raise ValueError(
                f"adjacency ({len(self.adjacency)}) and labels ({len(self.labels)}) "
                f"must both have n={self.n} entries"
            )
        if len(set(self.labels)) != self.n:
            raise ValueError("vertex labels must be unique")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {self.labels[v]!r}")
            for a, b in zip(nbrs, nbrs[1:]):
                if a >= b:
                    raise ValueError(f"adjacency of {self.labels[v]!r} must be strictly increasing")
            for w in nbrs:
                if not 0 <= w < self.n:
                    raise ValueError(f"neighbour index {w} of {self.labels[v]!r} out of range")
                if v not in self.adjacency[w]:
                    raise ValueError(
                        f"asymmetric edge {self.labels[v]!r}-{self.labels[w]!r}"
                    )

    @property
    def edge_count(self) -> int:
        return int(self.indptr[-1]) // 2

    def edges(self) -> List[Tuple[int, int]]:
        """Every edge once, as (u, v) with u < v."""
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def neighbors(self, v: int) -> np.ndarray:
        """Open neighbourhood N(v) as an int64 array view."""
        self._check_vertex(v)
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def index_of(self, label: str) -> int:
        """Index of the vertex called ``label``; KeyError if unknown."""
        return self._index[label]

    def has_label(self, label: str) -> bool:
        return label in self._index

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for graph with {self.n} vertices")

    def to_networkx(self) -> nx.Graph:
        """Unweighted networkx copy on integer nodes."""
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph


@dataclass(frozen=True)
class StreetNetwork:
    """
    Undirected street network with edge lengths in meters.

    Attributes:
        graph: The underlying simple graph.
        lengths: Length of every edge keyed by (u, v) with u < v.
    """
    graph: Graph
    lengths: Dict[Tuple[int, int], float]

    def __post_init__(self):
        expected = set(self.graph.edges())
        if set(self.lengths) != expected:
            raise ValueError("every edge needs exactly one length keyed (u, v) with u < v")
        for (u, v), length in self.lengths.items():
            if not (length > 0 and math.isfinite(length)):
                raise ValueError(
                    f"length of {self.graph.labels[u]!r}-{self.graph.labels[v]!r} must be "
                    f"a positive finite number, got {length!r}"
                )

    def length(self, u: int, v: int) -> float:
        """Length of edge u-v in either orientation."""
        return self.lengths[(u, v) if u < v else (v, u)]

    def to_networkx(self) -> nx.Graph:
        """networkx copy on integer nodes with a ``weight`` attribute."""
        nx_graph = self.graph.to_networkx()
        for u, v in nx_graph.edges():
            nx_graph[u][v]["weight"] = self.length(u, v)
        return nx_graph


def degree(graph: Graph, v: int) -> int:
    """Number of neighbours of vertex v."""
    graph._check_vertex(v)
    return int(graph.degrees[v])


def _decode(text: Union[bytes, str]) -> str:
    if isinstance(text, bytes):
        return text.decode("utf-8")
    return text


def _parse_length(token: str, line_number: int) -> float:
    try:
        length = float(token)
    except ValueError:
        raise GraphFormatError(line_number, f"non-numeric weight {token!r}")
    if not math.isfinite(length):
        raise GraphFormatError(line_number, f"weight must be finite, got {token!r}")
    if length <= 0:
        raise GraphFormatError(line_number, f"weight must be > 0, got {token!r}")
    return length


def load_edge_list(
    text: Union[bytes, str],
    weighted: bool = False
) -> Union[Graph, StreetNetwork]:
    """
    Parse an edge list into a validated Graph, or a StreetNetwork when weighted.

    Vertices get indices in order of first appearance.

    Raises:
        GraphFormatError: Wrong token count, bad weight, self-loop, or
            conflicting duplicate weights, with the offending line number.
    """
    labels: List[str] = []
    index: Dict[str, int] = {}
    lengths: Dict[Tuple[int, int], float] = {}
    edges = set()

    def vertex(name: str) -> int:
        if name not in index:
            index[name] = len(labels)
            labels.append(name)
        return index[name]

    expected = "'u v w'" if weighted else "'u v'"
    for line_number, raw in enumerate(_decode(text).split("\n"), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if len(tokens) == 1:
            vertex(tokens[0])
            continue
        if len(tokens) != (3 if weighted else 2):
            raise GraphFormatError(
                line_number, f"expected {expected} or a single vertex, got {len(tokens)} tokens"
            )
        if tokens[0] == tokens[1]:
            raise GraphFormatError(line_number, f"self-loop at vertex {tokens[0]!r}")
        length = _parse_length(tokens[2], line_number) if weighted else None
        u, v = vertex(tokens[0]), vertex(tokens[1])
        key = (u, v) if u < v else (v, u)
        if weighted:
            previous = lengths.get(key)
            if previous is not None and previous != length:
                raise GraphFormatError(
                    line_number,
                    f"conflicting weights for {tokens[0]!r}-{tokens[1]!r}: {previous!r} vs {length!r}",
                )
            lengths[key] = length
        edges.add(key)

    graph = Graph.from_edges(labels, edges)
    if weighted:
        return StreetNetwork(graph=graph, lengths=lengths)
    return graph


def write_edge_list(network: Union[Graph, StreetNetwork]) -> bytes:
    """
    Canonical edge-list text: each edge once with endpoints in label order,
    isolated vertices as single-token lines, all lines sorted.
    """
    weighted = isinstance(network, StreetNetwork)
    graph: Graph = network.graph if weighted else network

    lines = []
    for u, v in graph.edges():
        a, b = sorted((graph.labels[u], graph.labels[v]))
        if weighted:
            lines.append(f"{a} {b} {network.length(u, v)!r}")
        else:
            lines.append(f"{a} {b}")
    lines.extend(graph.labels[v] for v in range(graph.n) if graph.degrees[v] == 0)
    lines.sort()
    return "".join(line + "\n" for line in lines).encode("utf-8")


def read_graph_file(path: str, weighted: bool = False) -> Union[Graph, StreetNetwork]:
    """Load an edge-list file from disk."""
    with open(path, "rb") as handle:
        return load_edge_list(handle.read(), weighted=weighted)
