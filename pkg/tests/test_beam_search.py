"""
Unit tests for the beam-search workflow and its nodes.
"""
import unittest

import numpy as np

from src.beam_search import BeamSearch, beam_k_domination
from src.config import SolveConfig
from src.coverage import CoverageState, objective, verify_k_dominating
from src.edges import route_after_beam_check
from src.greedy import greedy_candidates, greedy_k_domination
from src.nodes import check_beam, expand_beam, rank_beam
from src.state import Beam, MemberSignatures, PartialSolution
from tests.fixtures import cycle, edgeless, path_abc, random_corpus


def initial_state(graph, k):
    return {
        "beam": Beam([PartialSolution.empty(graph, k)]),
        "candidates": {},
        "round": 0,
        "solution": None,
        "verbose": False,
    }


class TestBeamSearch(unittest.TestCase):
    """Test cases for beam_k_domination on small graphs."""

    def test_path_width_one(self):
        for seed in range(10):
            members = beam_k_domination(path_abc(), SolveConfig(k=2, seed=seed, beam_width=1))
            self.assertEqual(members, (0, 1, 2))

    def test_path_width_three_finds_optimum(self):
        for seed in range(10):
            members = beam_k_domination(path_abc(), SolveConfig(k=2, seed=seed, beam_width=3))
            self.assertEqual(members, (0, 2))

    def test_empty_graph(self):
        self.assertEqual(beam_k_domination(edgeless(0), SolveConfig(k=3, beam_width=2)), ())

    def test_edgeless(self):
        self.assertEqual(beam_k_domination(edgeless(3), SolveConfig(k=1, beam_width=2)), (0, 1, 2))

    def test_long_cycle_stays_within_recursion_limit(self):
        graph = cycle(40)
        members = beam_k_domination(graph, SolveConfig(k=2, beam_width=1))
        self.assertTrue(verify_k_dominating(graph, 2, members))

    def test_feasible_on_corpus(self):
        for i, graph in enumerate(random_corpus(40, 30, seed=30)):
            for k in (1, 2, 3):
                for b in (1, 2, 4):
                    members = beam_k_domination(graph, SolveConfig(k=k, seed=i, beam_width=b))
                    self.assertTrue(verify_k_dominating(graph, k, members))

    def test_deterministic(self):
        graph = random_corpus(1, 40, seed=31, min_n=30)[0]
        cfg = SolveConfig(k=2, seed=77, beam_width=3)
        self.assertEqual(beam_k_domination(graph, cfg), beam_k_domination(graph, cfg))

    def test_width_one_follows_greedy_argmax_sets(self):
        for i, graph in enumerate(random_corpus(40, 30, seed=32)):
            for k in (1, 2, 3):
                solution = BeamSearch(graph, SolveConfig(k=k, seed=i, beam_width=1)).run()
                replay = CoverageState(graph, k)
                for u in solution.history:
                    self.assertIn(u, greedy_candidates(replay).tolist())
                    replay.add_vertex(u)
                self.assertTrue(replay.is_k_dominating())
                self.assertEqual(replay.members(), solution.members)

    def test_width_one_matches_greedy(self):
        for i, graph in enumerate(random_corpus(40, 30, seed=32)):
            for k in (1, 2, 3):
                greedy = greedy_k_domination(graph, SolveConfig(k=k, seed=i))
                beam = beam_k_domination(graph, SolveConfig(k=k, seed=i, beam_width=1))
                self.assertEqual(beam, greedy)

    def test_returned_entry_caches_its_objective(self):
        for i, graph in enumerate(random_corpus(20, 25, seed=33)):
            solution = BeamSearch(graph, SolveConfig(k=2, seed=i, beam_width=3)).run()
            self.assertEqual(solution.objective_value, objective(solution.state))
            self.assertEqual(solution.members, solution.state.members())
            self.assertLessEqual(len(solution.history), graph.n)


class TestBeamNodes(unittest.TestCase):
    """Test cases for one round of expand -> rank -> check."""

    def test_expand_counts_children(self):
        graph = path_abc()
        state = expand_beam(initial_state(graph, 2), MemberSignatures(graph.n))
        self.assertEqual(state["candidates"]["vertex"].tolist(), [0, 1, 2])
        self.assertEqual(state["candidates"]["objective"].tolist(), [1, 2, 1])

    def test_rank_removes_duplicates_and_sorts(self):
        rng = np.random.default_rng(0)
        for graph in random_corpus(15, 20, seed=34, min_n=4):
            cfg = SolveConfig(k=2, beam_width=5)
            signatures = MemberSignatures(graph.n)
            state = initial_state(graph, 2)
            for _ in range(3):
                state = check_beam(state)
                if state["solution"] is not None:
                    break
                state = rank_beam(expand_beam(state, signatures), cfg, rng)
                beam = state["beam"]
                values = beam.objective_values()
                self.assertEqual(values, sorted(values, reverse=True))
                self.assertLessEqual(len(beam), 5)
                member_sets = [s.members for s in beam.solutions]
                self.assertEqual(len(member_sets), len(set(member_sets)))
                for s in beam.solutions:
                    self.assertEqual(s.objective_value, objective(s.state))
                    self.assertEqual(s.signature, signatures.of(s.members))
                    self.assertEqual(len(s.members), state["round"])

    def test_path_second_round_keeps_distinct_sets(self):
        graph = path_abc()
        cfg = SolveConfig(k=2, beam_width=3)
        rng = np.random.default_rng(1)
        signatures = MemberSignatures(graph.n)
        state = rank_beam(expand_beam(initial_state(graph, 2), signatures), cfg, rng)
        self.assertEqual([s.members for s in state["beam"].solutions][0], (1,))
        state = rank_beam(expand_beam(state, signatures), cfg, rng)
        self.assertEqual({s.members for s in state["beam"].solutions}, {(0, 1), (1, 2), (0, 2)})
        self.assertEqual(state["beam"].solutions[0].members, (0, 2))
        self.assertEqual(check_beam(state)["solution"].members, (0, 2))

    def test_tie_keys_ignore_beam_order(self):
        graph = cycle(8)
        first = PartialSolution.empty(graph, 2)
        entries = []
        for u in (5, 1):
            child = first.state.copy().add_vertex(u)
            entries.append(PartialSolution((u,), objective(child), child, (u,), MemberSignatures(8).of([u])))
        ranked = []
        for solutions in (entries, entries[::-1]):
            state = initial_state(graph, 2)
            state["beam"] = Beam(list(solutions))
            state["round"] = 1
            state = rank_beam(expand_beam(state, MemberSignatures(8)), SolveConfig(k=2, beam_width=4),
                              np.random.default_rng(9))
            ranked.append([s.members for s in state["beam"].solutions])
        self.assertEqual(ranked[0], ranked[1])

    def test_router(self):
        graph = path_abc()
        state = initial_state(graph, 2)
        self.assertEqual(route_after_beam_check(check_beam(state)), "expand_beam")
        empty = check_beam(initial_state(edgeless(0), 1))
        self.assertEqual(route_after_beam_check(empty), "__end__")


class TestMemberSignatures(unittest.TestCase):
    """Test cases for the XOR member-set signatures."""

    def test_order_independent(self):
        signatures = MemberSignatures(10)
        self.assertEqual(signatures.of([1, 4, 7]), signatures.of([7, 1, 4]))
        self.assertEqual(signatures.of([]), 0)

    def test_stable_across_instances(self):
        self.assertEqual(MemberSignatures(8).words.tolist(), MemberSignatures(8).words.tolist())


if __name__ == "__main__":
    unittest.main()
