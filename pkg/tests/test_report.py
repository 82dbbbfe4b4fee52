"""
Unit tests for trial statistics and report rendering.
"""
import unittest

from src.report import CSV_COLUMNS, TrialStats, emit_report, sample_stddev, summarize


def make_stats(graph="g.txt", method="greedy", k=2, b=None, sizes=(44, 45, 46)):
    n = len(sizes)
    return TrialStats(
        graph=graph,
        method=method,
        k=k,
        b=b,
        seeds=tuple(range(n)),
        sizes=tuple(sizes),
        times_s=tuple(0.5 for _ in range(n)),
    )


class TestTrialStats(unittest.TestCase):
    """Test cases for TrialStats."""

    def test_three_seeds(self):
        stats = make_stats()
        self.assertEqual(stats.min_size, 44)
        self.assertEqual(stats.mean_size, 45.0)
        self.assertAlmostEqual(stats.stddev_size, 1.0)
        self.assertEqual(stats.n_seeds, 3)
        self.assertFalse(stats.degenerate)

    def test_single_seed_is_degenerate(self):
        stats = make_stats(sizes=(7,))
        self.assertEqual(stats.stddev_size, 0.0)
        self.assertEqual(stats.stddev_time_s, 0.0)
        self.assertTrue(stats.degenerate)

    def test_needs_trials(self):
        with self.assertRaises(ValueError):
            make_stats(sizes=())

    def test_lengths_must_agree(self):
        with self.assertRaises(ValueError):
            TrialStats("g", "greedy", 1, None, (1, 2), (3,), (0.1,))

    def test_sample_stddev(self):
        self.assertEqual(sample_stddev([]), 0.0)
        self.assertAlmostEqual(sample_stddev([2.0, 4.0]), 2 ** 0.5)

    def test_summarize_records(self):
        trials = [
            {"seed": 11, "members": (0, 2), "size": 2, "time_s": 0.25},
            {"seed": 12, "members": (0, 1, 2), "size": 3, "time_s": 0.75},
        ]
        stats = summarize("path.txt", "beam", 2, 3, trials)
        self.assertEqual(stats.seeds, (11, 12))
        self.assertEqual(stats.sizes, (2, 3))
        self.assertEqual(stats.mean_time_s, 0.5)
        self.assertEqual(stats.row()["b"], "3")


class TestEmitReport(unittest.TestCase):
    """Test cases for emit_report."""

    def test_csv(self):
        text = emit_report([make_stats(), make_stats(method="beam", b=3, sizes=(40, 40, 41))]).decode()
        lines = text.split("\n")
        self.assertEqual(lines[0], ",".join(CSV_COLUMNS))
        self.assertEqual(lines[1], "g.txt,greedy,2,,3,44,45.0000,1.0000,0.5000,0.0000")
        self.assertTrue(lines[2].startswith("g.txt,beam,2,3,3,40,40.3333,"))
        self.assertEqual(lines[3], "")
        self.assertEqual(len(lines), 4)

    def test_csv_single_seed(self):
        text = emit_report([make_stats(sizes=(9,))]).decode()
        self.assertIn(",1,9,9.0000,0.0000,", text)

    def test_empty_rejected(self):
        with self.assertRaises(ValueError):
            emit_report([])

    def test_unknown_format(self):
        with self.assertRaises(ValueError):
            emit_report([make_stats()], fmt="xml")

    def test_table_has_no_average_for_one_graph(self):
        text = emit_report([make_stats()], fmt="table").decode()
        self.assertIn("greedy", text)
        self.assertNotIn("Average", text)

    def test_table_average_and_reduction(self):
        stats = [
            make_stats(graph="one.txt", method="standard", sizes=(50, 50)),
            make_stats(graph="one.txt", method="greedy", sizes=(45, 45)),
            make_stats(graph="two.txt", method="standard", sizes=(100, 100)),
            make_stats(graph="two.txt", method="greedy", sizes=(80, 80)),
        ]
        text = emit_report(stats, fmt="table").decode()
        self.assertIn("Average", text)
        self.assertIn("min_vs_standard_%", text)
        self.assertIn("10.00", text)
        self.assertIn("20.00", text)

    def test_table_notes_degenerate_rows(self):
        text = emit_report([make_stats(sizes=(3,))], fmt="table").decode()
        self.assertIn("degenerate", text)


if __name__ == "__main__":
    unittest.main()
