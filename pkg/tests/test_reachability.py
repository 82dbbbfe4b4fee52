"""
Unit tests for reachability-graph construction.
"""
import unittest

import networkx as nx

from src.graph_core import load_edge_list
from src.reachability import ReachabilityConfig, build_reachability
from tests.fixtures import random_street_networks


def edge_labels(graph):
    return {tuple(sorted((graph.labels[u], graph.labels[v]))) for u, v in graph.edges()}


def naive_reachability_edges(network, threshold):
    """All-pairs shortest paths without cutoff, thresholded afterwards."""
    distances = dict(nx.all_pairs_dijkstra_path_length(network.to_networkx(), weight="weight"))
    n = network.graph.n
    return {(u, v) for u in range(n) for v in range(u + 1, n)
            if v in distances[u] and distances[u][v] < threshold}


class TestBuildReachability(unittest.TestCase):
    """Test cases for build_reachability."""

    def setUp(self):
        self.path = load_edge_list("x y 300\ny z 300\n", weighted=True)

    def test_short_threshold(self):
        graph = build_reachability(self.path, ReachabilityConfig(threshold_t=500))
        self.assertEqual(edge_labels(graph), {("x", "y"), ("y", "z")})

    def test_long_threshold(self):
        graph = build_reachability(self.path, ReachabilityConfig(threshold_t=700))
        self.assertEqual(edge_labels(graph), {("x", "y"), ("y", "z"), ("x", "z")})

    def test_below_minimum_edge_length(self):
        graph = build_reachability(self.path, ReachabilityConfig(threshold_t=299.5))
        self.assertEqual(graph.n, 3)
        self.assertEqual(graph.edge_count, 0)

    def test_distance_equal_to_threshold_excluded(self):
        graph = build_reachability(self.path, ReachabilityConfig(threshold_t=600))
        self.assertNotIn(("x", "z"), edge_labels(graph))
        graph = build_reachability(self.path, ReachabilityConfig(threshold_t=300))
        self.assertEqual(graph.edge_count, 0)

    def test_same_labels(self):
        graph = build_reachability(self.path, ReachabilityConfig(threshold_t=500))
        self.assertEqual(graph.labels, self.path.graph.labels)

    def test_disconnected_pairs_get_no_edge(self):
        network = load_edge_list("a b 10\nc d 10\n", weighted=True)
        graph = build_reachability(network, ReachabilityConfig(threshold_t=1e9))
        self.assertEqual(edge_labels(graph), {("a", "b"), ("c", "d")})

    def test_agrees_with_all_pairs(self):
        for network in random_street_networks(50, 60, seed=10):
            for threshold in (50.0, 250.0, 800.0):
                graph = build_reachability(network, ReachabilityConfig(threshold_t=threshold))
                self.assertEqual(set(graph.edges()), naive_reachability_edges(network, threshold))

    def test_monotone_in_threshold(self):
        for network in random_street_networks(20, 40, seed=11):
            previous = set()
            for threshold in (10.0, 100.0, 300.0, 600.0, 1200.0):
                edges = set(build_reachability(network, ReachabilityConfig(threshold)).edges())
                self.assertTrue(previous <= edges)
                previous = edges

    def test_street_edges_below_threshold_kept(self):
        for network in random_street_networks(20, 40, seed=12):
            edges = set(build_reachability(network, ReachabilityConfig(250.0)).edges())
            for edge, length in network.lengths.items():
                if length < 250.0:
                    self.assertIn(edge, edges)

    def test_workers_do_not_change_result(self):
        for network in random_street_networks(5, 60, seed=13):
            serial = build_reachability(network, ReachabilityConfig(400.0))
            threaded = build_reachability(network, ReachabilityConfig(400.0, workers=4))
            self.assertEqual(serial.adjacency, threaded.adjacency)


class TestReachabilityConfig(unittest.TestCase):
    """Test cases for ReachabilityConfig validation."""

    def test_threshold_must_be_positive(self):
        for bad in (0, -1.0, float("nan")):
            with self.assertRaises(ValueError):
                ReachabilityConfig(threshold_t=bad)

    def test_workers_must_be_positive(self):
        with self.assertRaises(ValueError):
            ReachabilityConfig(threshold_t=1.0, workers=0)


if __name__ == "__main__":
    unittest.main()
