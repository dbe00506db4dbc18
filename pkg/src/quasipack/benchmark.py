"""Timing of the fast path against the listing-faithful path."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import TextIO

from .cluster import EmbeddingMatrix
from .config import EngineConfig
from .lattice import PointSet, RunStats, run
from .naive import run_listing
from .strip import build_constraints


@dataclass
class PathTiming:
    name: str
    seconds: float
    stats: RunStats

    @property
    def points_per_second(self) -> float:
        return self.stats.obtained / self.seconds if self.seconds > 0 else float("inf")


@dataclass
class BenchmarkReport:
    optimized: PathTiming
    naive: PathTiming
    identical: bool
    optimized_points: PointSet

    @property
    def speedup(self) -> float:
        return self.naive.seconds / self.optimized.seconds

    def write(self, sink: TextIO) -> None:
        for t in (self.optimized, self.naive):
            sink.write(
                f"{t.name:<9} time {t.seconds:9.3f} s  points/s {t.points_per_second:10.1f}  "
                f"analysed {t.stats.analysed}  obtained {t.stats.obtained}  "
                f"boundary {t.stats.boundary_points}\n"
            )
        sink.write(f"speedup {self.speedup:.1f}x  identical output: {'yes' if self.identical else 'NO'}\n")


def same_points(a: PointSet, b: PointSet) -> bool:
    """Mutual containment, each lookup at the other set's dedup tolerance."""
    if len(a) != len(b):
        return False
    return all(b.find(x) is not None for x in a.points) and all(a.find(x) is not None for x in b.points)


def benchmark(B: EmbeddingMatrix, config: EngineConfig) -> BenchmarkReport:
    """Run both paths on the same configuration; constraint setup is timed too."""
    t0 = time.perf_counter()
    cs = build_constraints(B, config.degeneracy_tol)
    fast_points, fast_stats = run(B, cs, config)
    t1 = time.perf_counter()
    slow_points, slow_stats = run_listing(B, config)
    t2 = time.perf_counter()
    identical = fast_stats == slow_stats and same_points(fast_points, slow_points)
    return BenchmarkReport(
        PathTiming("optimized", t1 - t0, fast_stats),
        PathTiming("naive", t2 - t1, slow_stats),
        identical,
        fast_points,
    )
