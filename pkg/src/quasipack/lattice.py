"""Breadth-first enumeration of the lattice points inside the strip."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .cluster import EmbeddingMatrix
from .config import DEFAULT_DEDUP_TOL, EngineConfig
from .strip import ConstraintSet, classify_many


def initial_point(tr) -> np.ndarray:
    """Componentwise rounding of ``tr`` to the nearest integer, halves away from zero."""
    t = np.asarray(tr, dtype=float)
    return (np.sign(t) * np.floor(np.abs(t) + 0.5)).astype(np.int64)


def neighbors(p) -> list[np.ndarray]:
    """The 2M points ``p - e_i`` and ``p + e_i``, i ascending, minus before plus."""
    p = np.asarray(p, dtype=np.int64)
    out = []
    for i in range(p.shape[0]):
        for step in (-1, 1):
            w = p.copy()
            w[i] += step
            out.append(w)
    return out


@dataclass
class RunStats:
    analysed: int = 0
    obtained: int = 0
    boundary_points: int = 0


class PointSet:
    """Physical points deduplicated to within ``tol`` in the max-norm.

    Lookup goes through a grid of cells of side ``tol``; a candidate only has
    to be compared with points in the 3**D surrounding cells.
    """

    def __init__(self, dim: int, tol: float = DEFAULT_DEDUP_TOL):
        if not tol > 0:
            raise ValueError("dedup tolerance must be positive")
        self.dim = dim
        self.tol = tol
        self.points: list[np.ndarray] = []
        self.sources: list[np.ndarray] = []
        self._cells: dict[tuple[int, ...], list[int]] = {}
        self._offsets = list(itertools.product((-1, 0, 1), repeat=dim))

    def __len__(self) -> int:
        return len(self.points)

    def _key(self, x: np.ndarray) -> tuple[int, ...]:
        return tuple(int(c) for c in np.floor(x / self.tol))

    def find(self, x) -> int | None:
        x = np.asarray(x, dtype=float)
        key = self._key(x)
        for off in self._offsets:
            cell = tuple(k + o for k, o in zip(key, off))
            for j in self._cells.get(cell, ()):
                if np.max(np.abs(self.points[j] - x)) <= self.tol:
                    return j
        return None

    def insert(self, x, source=None) -> bool:
        x = np.array(x, dtype=float).reshape(self.dim)
        if self.find(x) is not None:
            return False
        self._cells.setdefault(self._key(x), []).append(len(self.points))
        self.points.append(x)
        self.sources.append(None if source is None else np.asarray(source, dtype=np.int64))
        return True

    def as_array(self) -> np.ndarray:
        if not self.points:
            return np.empty((0, self.dim))
        return np.array(self.points)

    def sorted_points(self) -> np.ndarray:
        """Points in lexicographic order of their coordinates."""
        pts = self.as_array()
        if len(pts) == 0:
            return pts
        order = np.lexsort(pts.T[::-1])
        return pts[order]


def insert_dedup(ps: PointSet, x, tol: float | None = None) -> bool:
    if tol is not None and tol != ps.tol:
        raise ValueError("tolerance must match the point set's lookup grid")
    return ps.insert(x)


def run(B: EmbeddingMatrix, cs: ConstraintSet, config: EngineConfig) -> tuple[PointSet, RunStats]:
    """Enumerate strip points breadth-first from the rounded translation.

    Points are popped in enqueue order.  Accepted points are projected and
    deduplicated, and their unvisited neighbours are enqueued while fewer
    than ``config.max_enqueued`` points have been enqueued in total.
    Classification is deferred and done in batches over the pending part of
    the queue; a point's status does not depend on when it is computed.
    """
    m = B.super_dim
    if config.super_dim != m or cs.super_dim != m:
        raise ValueError(
            f"dimension mismatch: embedding has M={m}, config {config.super_dim}, constraints {cs.super_dim}"
        )
    cap = int(config.max_enqueued)
    if cap < 1:
        raise ValueError("max_enqueued must be >= 1")
    tr = config.tr

    queue = np.zeros((cap, m), dtype=np.int64)
    inside = np.zeros(cap, dtype=bool)
    boundary = np.zeros(cap, dtype=bool)
    classified = 0
    start = initial_point(tr)
    queue[0] = start
    visited = {start.tobytes()}
    enqueued = 1

    points = PointSet(B.phys_dim, config.dedup_tol)
    stats = RunStats()
    head = 0
    while head < enqueued:
        if head >= classified:
            ins, bnd = classify_many(
                queue[classified:enqueued] - tr, cs, config.boundary_tol, config.threads
            )
            inside[classified:enqueued] = ins
            boundary[classified:enqueued] = bnd
            classified = enqueued
        p = queue[head]
        i = head
        head += 1
        stats.analysed += 1
        if not inside[i]:
            continue
        x = B.matrix @ (p - tr)
        if points.insert(x, source=p) and boundary[i]:
            stats.boundary_points += 1
        for axis in range(m):
            for step in (-1, 1):
                if enqueued >= cap:
                    break
                w = p.copy()
                w[axis] += step
                key = w.tobytes()
                if key in visited:
                    continue
                visited.add(key)
                queue[enqueued] = w
                enqueued += 1
    stats.obtained = len(points)
    return points, stats
