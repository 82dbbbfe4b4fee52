"""
Configuration for the k-domination toolkit.

Defaults are read from the environment (optionally via a ``.env`` file loaded
with python-dotenv) and fall back to hard-coded values. Typed configuration
objects used by the solvers live here too.

Environment variables:
    KDOM_SEED: Default solver seed and bench master seed (default 2019).
    KDOM_N_SEEDS: Seeds per experiment (default 10).
    KDOM_NODE_BUDGET: Node limit for the exact oracle (default 2,000,000).
    KDOM_VERBOSE: "1"/"true" turns on progress output on stderr.
"""
import os
import sys
from dataclasses import dataclass

from dotenv import load_dotenv

load_dotenv()


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


DEFAULT_SEED = _env_int("KDOM_SEED", 2019)
DEFAULT_N_SEEDS = _env_int("KDOM_N_SEEDS", 10)
DEFAULT_NODE_BUDGET = _env_int("KDOM_NODE_BUDGET", 2_000_000)

SEED_MASK = (1 << 64) - 1


def verbose_enabled() -> bool:
    """Return True when KDOM_VERBOSE asks for progress output."""
    return os.getenv("KDOM_VERBOSE", "false").strip().lower() in ("1", "true", "yes")


def progress(message: str, verbose: bool) -> None:
    """Print a progress line to stderr when verbose is on."""
    if verbose:
        print(message, file=sys.stderr)


@dataclass(frozen=True)
class SolveConfig:
    """
    Parameters of a single heuristic solve.

    Attributes:
        k: Domination level, at least 1.
        seed: 64-bit seed for the solver's numpy Generator.
        beam_width: Beam width b, at least 1. Only beam search reads it.
        verbose: Print node/route progress to stderr.
    """
    k: int
    seed: int = DEFAULT_SEED
    beam_width: int = 1
    verbose: bool = False

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")
        if not isinstance(self.beam_width, int) or self.beam_width < 1:
            raise ValueError(f"beam_width must be a positive integer, got {self.beam_width!r}")
        if not 0 <= self.seed <= SEED_MASK:
            raise ValueError(f"seed must fit in 64 bits, got {self.seed!r}")
