"""
Trial statistics and report rendering for bench runs.

TrialStats summarizes one (graph, method, k, b) experiment: solution sizes and
solve times per seed, with min / mean / sample standard deviation. Reports
are built with pandas:

- csv: one row per TrialStats, fixed column order, ``\\n`` line endings.
- table: the same rows aligned for reading, plus an ``Average`` row per
  (method, k, b) when several graphs were run, and the reduction of min and
  mean against standard greedy on the same graph when standard greedy is
  part of the run.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

CSV_COLUMNS = [
    "graph", "method", "k", "b", "n_seeds",
    "min", "mean", "stddev", "mean_time_s", "stddev_time_s",
]

FLOAT_FORMAT = "%.4f"


def sample_stddev(values: Sequence[float]) -> float:
    """Standard deviation with the n-1 denominator; 0.0 for fewer than two values."""
    if len(values) < 2:
        return 0.0
    return float(np.std(np.asarray(values, dtype=float), ddof=1))


@dataclass(frozen=True)
class TrialStats:
    """
    Attributes:
        graph: Instance name (file name of the edge list).
        method: Solver name.
        k: Domination level.
        b: Beam width, None for the other methods.
        seeds: Seed of every trial.
        sizes: |D| per trial; every D was verified before it was recorded.
        times_s: Wall-clock seconds of each solve call.
    """
    graph: str
    method: str
    k: int
    b: Optional[int]
    seeds: Tuple[int, ...]
    sizes: Tuple[int, ...]
    times_s: Tuple[float, ...]

    def __post_init__(self):
        if not self.sizes:
            raise ValueError("TrialStats needs at least one trial")
        if not len(self.sizes) == len(self.times_s) == len(self.seeds):
            raise ValueError("seeds, sizes and times_s must have one entry per trial")

    @property
    def n_seeds(self) -> int:
        return len(self.sizes)

    @property
    def min_size(self) -> int:
        return min(self.sizes)

    @property
    def mean_size(self) -> float:
        return float(np.mean(self.sizes))

    @property
    def stddev_size(self) -> float:
        return sample_stddev(self.sizes)

    @property
    def mean_time_s(self) -> float:
        return float(np.mean(self.times_s))

    @property
    def stddev_time_s(self) -> float:
        return sample_stddev(self.times_s)

    @property
    def degenerate(self) -> bool:
        """One trial only: the standard deviations are reported as 0.0."""
        return self.n_seeds == 1

    def row(self) -> dict:
        return {
            "graph": self.graph,
            "method": self.method,
            "k": self.k,
            "b": "" if self.b is None else str(self.b),
            "n_seeds": self.n_seeds,
            "min": self.min_size,
            "mean": self.mean_size,
            "stddev": self.stddev_size,
            "mean_time_s": self.mean_time_s,
            "stddev_time_s": self.stddev_time_s,
        }


def stats_frame(stats: Sequence[TrialStats]) -> pd.DataFrame:
    """One row per TrialStats, columns in CSV order."""
    if not stats:
        raise ValueError("nothing to report: no trial statistics given")
    return pd.DataFrame([s.row() for s in stats], columns=CSV_COLUMNS)


def _with_averages(frame: pd.DataFrame) -> pd.DataFrame:
    if frame["graph"].nunique() < 2:
        return frame
    numeric = ["n_seeds", "min", "mean", "stddev", "mean_time_s", "stddev_time_s"]
    averages = frame.groupby(["method", "k", "b"], sort=False)[numeric].mean().reset_index()
    averages["n_seeds"] = averages["n_seeds"].round().astype(int)
    averages.insert(0, "graph", "Average")
    return pd.concat([frame, averages[CSV_COLUMNS]], ignore_index=True)


def _with_reductions(frame: pd.DataFrame) -> pd.DataFrame:
    standard = frame[frame["method"] == "standard"].set_index(["graph", "k"])
    if standard.empty:
        return frame
    frame = frame.copy()
    for column in ("min", "mean"):
        reductions = []
        for _, row in frame.iterrows():
            key = (row["graph"], row["k"])
            if key in standard.index and row["method"] != "standard":
                base = float(standard.loc[key, column])
                reductions.append(f"{100.0 * (base - row[column]) / base:.2f}" if base else "")
            else:
                reductions.append("")
        frame[f"{column}_vs_standard_%"] = reductions
    return frame


def emit_report(stats: Sequence[TrialStats], fmt: str = "csv") -> bytes:
    """
    Render trial statistics.

    Args:
        stats: Non-empty list of TrialStats.
        fmt: "csv" or "table".

    Raises:
        ValueError: Empty ``stats`` or unknown format.
    """
    frame = stats_frame(stats)
    if fmt == "csv":
        return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n").encode("utf-8")
    if fmt == "table":
        table = _with_reductions(_with_averages(frame))
        text = table.to_string(index=False, float_format=lambda x: FLOAT_FORMAT % x)
        notes = [
            f"note: {s.graph} {s.method}: single seed, degenerate sample (stddev reported as 0.0)"
            for s in stats if s.degenerate
        ]
        return ("\n".join([text] + notes) + "\n").encode("utf-8")
    raise ValueError(f"unknown report format {fmt!r}; expected csv or table")


def summarize(graph: str, method: str, k: int, b: Optional[int],
              trials: List[dict]) -> TrialStats:
    """Build TrialStats from run_trials records ({"seed", "size", "time_s", ...})."""
    return TrialStats(
        graph=graph,
        method=method,
        k=k,
        b=b,
        seeds=tuple(t["seed"] for t in trials),
        sizes=tuple(t["size"] for t in trials),
        times_s=tuple(t["time_s"] for t in trials),
    )
