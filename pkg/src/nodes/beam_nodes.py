"""
Beam-search nodes.

One round of the search is expand -> rank -> check:

- expand_beam: every retained partial solution s is extended by every
  vertex u outside s. Children are not materialized; the objective of
  s ∪ {u} is the objective of s plus the gain of u, read from s's counters.
- rank_beam: duplicate member sets are dropped, the rest are sorted by
  objective (descending) with random tie keys, and the first b are
  materialized as the new beam.
- check_beam: the highest-ranked k-dominating entry of the beam, if any,
  becomes the solution.
"""
from typing import List

import numpy as np
from numpy.random import Generator

from src.config import SolveConfig, progress
from src.state import Beam, BeamState, MemberSignatures, PartialSolution


def expand_beam(state: BeamState, signatures: MemberSignatures) -> BeamState:
    """
    Enumerate the children of every beam entry as parallel arrays.

    State Modifications:
        - Sets state["candidates"] to {"parent", "vertex", "objective",
          "signature"}, ordered by parent rank then vertex index.
    """
    parents, vertices, objectives, sigs = [], [], [], []
    for rank, solution in enumerate(state["beam"].solutions):
        outside = np.flatnonzero(~solution.state.in_D)
        gains = solution.state.delta_all()[outside]
        parents.append(np.full(outside.size, rank, dtype=np.int64))
        vertices.append(outside)
        objectives.append(solution.objective_value + gains)
        sigs.append(signatures.words[outside] ^ np.uint64(solution.signature))

    state["candidates"] = {
        "parent": np.concatenate(parents),
        "vertex": np.concatenate(vertices),
        "objective": np.concatenate(objectives),
        "signature": np.concatenate(sigs),
    }
    progress(
        f"✓ NODE: expand_beam (round {state['round'] + 1})\n"
        f"  Expanded {len(state['beam'])} partial solution(s) into "
        f"{state['candidates']['vertex'].size} children",
        state["verbose"],
    )
    return state


def _unique_positions(beam: Beam, parent: np.ndarray, vertex: np.ndarray,
                      signature: np.ndarray) -> np.ndarray:
    """Mask keeping the first occurrence of every distinct member set."""
    keep = np.ones(signature.size, dtype=bool)
    if signature.size < 2:
        return keep
    order = np.argsort(signature, kind="stable")
    boundaries = np.flatnonzero(np.diff(signature[order])) + 1
    starts = np.concatenate(([0], boundaries))
    ends = np.concatenate((boundaries, [signature.size]))
    for run in np.flatnonzero(ends - starts > 1):
        seen: List[frozenset] = []
        for pos in order[starts[run]:ends[run]]:
            members = frozenset(beam.solutions[parent[pos]].members) | {int(vertex[pos])}
            if members in seen:
                keep[pos] = False
            else:
                seen.append(members)
    return keep


def _canonical_order(beam: Beam, parent: np.ndarray, vertex: np.ndarray) -> np.ndarray:
    """Positions sorted by the children's member sets, as sorted tuples compared lexicographically."""
    parents = np.array([s.members for s in beam.solutions], dtype=np.int64).reshape(len(beam), -1)
    rows = np.sort(np.column_stack((parents[parent], vertex)), axis=1)
    return np.lexsort(rows.T[::-1])


def rank_beam(state: BeamState, solve_config: SolveConfig, rng: Generator) -> BeamState:
    """
    Deduplicate, sort and truncate the expansion, then build the new beam.

    Tie keys are drawn once per surviving child after deduplication, in
    canonical member-set order (sorted member tuples, lexicographic). For a
    single parent that is vertex-index order, the order the greedy search
    draws its keys in. Only the b retained children get their own coverage
    state (a copy of the parent's plus one add_vertex).

    State Modifications:
        - Replaces state["beam"] with at most b children, best first.
        - Increments state["round"].
    """
    beam = state["beam"]
    cands = state["candidates"]
    keep = _unique_positions(beam, cands["parent"], cands["vertex"], cands["signature"])
    parent = cands["parent"][keep]
    vertex = cands["vertex"][keep]
    objective = cands["objective"][keep]
    signature = cands["signature"][keep]

    tie_keys = np.empty(vertex.size)
    tie_keys[_canonical_order(beam, parent, vertex)] = rng.random(vertex.size)
    ranked = np.lexsort((tie_keys, -objective))[:solve_config.beam_width]

    children = []
    for pos in ranked:
        source = beam.solutions[parent[pos]]
        u = int(vertex[pos])
        children.append(PartialSolution(
            members=tuple(sorted(source.members + (u,))),
            objective_value=int(objective[pos]),
            state=source.state.copy().add_vertex(u),
            history=source.history + (u,),
            signature=int(signature[pos]),
        ))

    state["beam"] = Beam(children)
    state["round"] += 1
    progress(
        f"✓ NODE: rank_beam\n"
        f"  {int(keep.sum())} distinct of {keep.size} children; kept {len(children)}, "
        f"objectives {state['beam'].objective_values()}",
        state["verbose"],
    )
    return state


def check_beam(state: BeamState) -> BeamState:
    """
    Look for a k-dominating entry among the retained solutions.

    State Modifications:
        - Sets state["solution"] to the highest-ranked feasible entry, if any.
    """
    state["solution"] = state["beam"].first_feasible()
    progress(
        f"✓ NODE: check_beam\n"
        f"  Feasible entry found: {state['solution'] is not None}",
        state["verbose"],
    )
    return state
