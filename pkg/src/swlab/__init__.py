"""Small-world analysis of growing network families."""

from ._backend import BACKEND
from .graph import (
    AlphaArray,
    DisconnectedGraphError,
    DistanceSummary,
    Graph,
    GraphError,
    alpha_array,
    bfs_distances,
    diameter,
    mean_distance,
    median_distance,
    summarize,
    summary,
)

__all__ = [
    "BACKEND",
    "AlphaArray",
    "DisconnectedGraphError",
    "DistanceSummary",
    "Graph",
    "GraphError",
    "alpha_array",
    "bfs_distances",
    "diameter",
    "mean_distance",
    "median_distance",
    "summarize",
    "summary",
]
