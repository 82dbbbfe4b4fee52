"""
k-domination toolkit package.
"""

__all__ = [
    "Graph",
    "StreetNetwork",
    "CoverageState",
    "BeamSearch",
    "ExperimentRunner",
]
