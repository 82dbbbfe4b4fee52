"""
Coverage bookkeeping shared by every solver.

For a growing set D and a level k, a vertex v outside D is covered
C(D, v) = min(k, |N(v) ∩ D|) times. The unconstrained objective is the sum
of C(D, v) over the vertices outside D; on k-dominating sets it equals
k * (n - |D|), so maximizing it minimizes |D|.

CoverageState keeps two counters per vertex so the gain of adding any vertex
can be read off without simulating the addition:

    cov[v]         |N(v) ∩ D|, uncapped
    undom_nbrs[u]  neighbours of u that are outside D with cov < k

The gain of adding u is then undom_nbrs[u] - min(k, cov[u]).
"""
from typing import List, Sequence, Tuple

import numpy as np

from src.graph_core import Graph


class CoverageState:
    """
    Mutable coverage counters for one growing vertex set D.

    A state only ever grows; solvers that branch (beam search) copy it.

    Attributes:
        graph: The shared, immutable graph.
        k: Domination level.
        in_D: Boolean membership flags.
        cov: Number of neighbours in D, per vertex.
        undom_nbrs: Number of neighbours that are outside D and not yet
            covered k times, per vertex.
        size_D: |D|.
    """

    def __init__(self, graph: Graph, k: int):
        if k < 1:
            raise ValueError(f"k must be a positive integer, got {k!r}")
        self.graph = graph
        self.k = k
        self.in_D = np.zeros(graph.n, dtype=bool)
        self.cov = np.zeros(graph.n, dtype=np.int64)
        # with D empty every vertex still needs coverage
        self.undom_nbrs = graph.degrees.copy()
        self.size_D = 0

    @classmethod
    def from_members(cls, graph: Graph, k: int, members: Sequence[int]) -> "CoverageState":
        state = cls(graph, k)
        for u in members:
            state.add_vertex(int(u))
        return state

    def copy(self) -> "CoverageState":
        clone = CoverageState.__new__(CoverageState)
        clone.graph = self.graph
        clone.k = self.k
        clone.in_D = self.in_D.copy()
        clone.cov = self.cov.copy()
        clone.undom_nbrs = self.undom_nbrs.copy()
        clone.size_D = self.size_D
        return clone

    def members(self) -> Tuple[int, ...]:
        """D as a sorted tuple of vertex indices."""
        return tuple(int(v) for v in np.flatnonzero(self.in_D))

    def needy_mask(self) -> np.ndarray:
        """Vertices outside D with fewer than k neighbours in D."""
        return ~self.in_D & (self.cov < self.k)

    def coverage(self, v: int) -> int:
        """C(D, v) = min(k, |N(v) ∩ D|)."""
        self.graph._check_vertex(v)
        return int(min(self.k, self.cov[v]))

    def objective(self) -> int:
        """Sum of C(D, v) over v outside D."""
        return int(np.minimum(self.cov[~self.in_D], self.k).sum())

    def is_k_dominating(self) -> bool:
        """True when every vertex outside D has at least k neighbours in D."""
        return not bool(self.needy_mask().any())

    def violations(self) -> List[Tuple[int, int]]:
        """(vertex, cov) for every vertex outside D covered fewer than k times."""
        return [(int(v), int(self.cov[v])) for v in np.flatnonzero(self.needy_mask())]

    def delta(self, u: int) -> int:
        """Change of the objective when u joins D."""
        self.graph._check_vertex(u)
        if self.in_D[u]:
            raise ValueError(f"vertex {u} is already in D")
        return int(self.undom_nbrs[u] - min(self.k, self.cov[u]))

    def delta_all(self) -> np.ndarray:
        """
        Gain of every vertex at once; members of D get the minimum int64 value
        so they never win an argmax.
        """
        gains = self.undom_nbrs - np.minimum(self.cov, self.k)
        gains[self.in_D] = np.iinfo(np.int64).min
        return gains

    def add_vertex(self, u: int) -> "CoverageState":
        """
        Put u into D and update the counters locally.

        A vertex leaves the "not covered enough" pool when it joins D or when
        its cov reaches k; each of its neighbours then loses one from
        undom_nbrs.
        """
        self.graph._check_vertex(u)
        if self.in_D[u]:
            raise ValueError(f"vertex {u} is already in D")
        graph = self.graph
        was_needy = self.cov[u] < self.k
        self.in_D[u] = True
        self.size_D += 1

        nbrs = graph.neighbors(u)
        self.cov[nbrs] += 1
        leaving = nbrs[(self.cov[nbrs] == self.k) & ~self.in_D[nbrs]]
        if was_needy:
            leaving = np.append(leaving, u)
        if leaving.size:
            touched = np.concatenate(
                [graph.indices[graph.indptr[v]:graph.indptr[v + 1]] for v in leaving]
            )
            np.subtract.at(self.undom_nbrs, touched, 1)
        return self

    def recount(self) -> Tuple[np.ndarray, np.ndarray]:
        """Brute-force (cov, undom_nbrs) from in_D, for invariant checks."""
        n = self.graph.n
        cov = np.zeros(n, dtype=np.int64)
        for v in range(n):
            cov[v] = int(self.in_D[self.graph.neighbors(v)].sum())
        needy = ~self.in_D & (cov < self.k)
        undom = np.array(
            [int(needy[self.graph.neighbors(u)].sum()) for u in range(n)], dtype=np.int64
        )
        return cov, undom

    def check_invariants(self) -> None:
        """Raise AssertionError if the counters disagree with a full recount."""
        cov, undom = self.recount()
        if not np.array_equal(cov, self.cov):
            raise AssertionError("cov disagrees with recount")
        if not np.array_equal(undom, self.undom_nbrs):
            raise AssertionError("undom_nbrs disagrees with recount")
        if self.size_D != int(self.in_D.sum()):
            raise AssertionError("size_D disagrees with membership flags")


def coverage(state: CoverageState, v: int) -> int:
    return state.coverage(v)


def objective(state: CoverageState) -> int:
    return state.objective()


def is_k_dominating(state: CoverageState) -> bool:
    return state.is_k_dominating()


def delta(state: CoverageState, u: int) -> int:
    return state.delta(u)


def add_vertex(state: CoverageState, u: int) -> CoverageState:
    return state.add_vertex(u)


def verify_k_dominating(graph: Graph, k: int, members: Sequence[int]) -> bool:
    """Recheck a finished solution from scratch."""
    in_D = np.zeros(graph.n, dtype=bool)
    in_D[np.asarray(list(members), dtype=np.int64)] = True
    for v in range(graph.n):
        if not in_D[v] and int(in_D[graph.neighbors(v)].sum()) < k:
            return False
    return True
