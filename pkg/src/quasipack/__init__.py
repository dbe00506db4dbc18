"""Quasiperiodic point sets by strip projection from a high-dimensional lattice."""

from .cluster import TAU, ClusterSpec, EmbeddingMatrix, build_embedding, preset
from .config import EngineConfig
from .lattice import PointSet, RunStats, run
from .strip import ConstraintSet, build_constraints, classify

__all__ = [
    "TAU",
    "ClusterSpec",
    "ConstraintSet",
    "EmbeddingMatrix",
    "EngineConfig",
    "PointSet",
    "RunStats",
    "build_constraints",
    "build_embedding",
    "classify",
    "preset",
    "run",
]
