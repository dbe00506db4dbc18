"""Reference path that keeps the original program's cost structure.

Every analysed point recomputes all D x D minors, half-widths come from
explicit corner enumeration, degenerate subsets get a huge sentinel bound
instead of being dropped, and the visited and output lists are scanned
linearly.  It exists for benchmarking and as a cross-check of the fast path.
"""

from __future__ import annotations

import itertools
from math import comb

import numpy as np

from .cluster import EmbeddingMatrix
from .config import EngineConfig
from .lattice import PointSet, RunStats, initial_point
from .strip import determinants


def subsets(super_dim: int, size: int) -> np.ndarray:
    flat = np.fromiter(
        itertools.chain.from_iterable(itertools.combinations(range(super_dim), size)),
        dtype=np.intp,
        count=comb(super_dim, size) * size,
    )
    return flat.reshape(-1, size)


def _minor_stacks(B: EmbeddingMatrix, idx: np.ndarray) -> list[np.ndarray]:
    stacks = []
    for pos in range(idx.shape[1]):
        others = np.delete(idx, pos, axis=1)
        stacks.append(np.transpose(B.matrix[:, others], (1, 0, 2)))
    return stacks


def functional_values(idx: np.ndarray, stacks: list[np.ndarray], v: np.ndarray) -> np.ndarray:
    """Evaluate every subset functional at ``v``, minors computed from scratch."""
    total = np.zeros(idx.shape[0])
    for pos, stack in enumerate(stacks):
        term = v[idx[:, pos]] * determinants(stack)
        total = total + term if pos % 2 == 0 else total - term
    return total


def corner_half_width(B: EmbeddingMatrix, idx: np.ndarray) -> np.ndarray:
    """Maximum of each subset functional over the 2**(D+1) corners of the half cube."""
    k = idx.shape[1]
    stacks = _minor_stacks(B, idx)
    best = np.zeros(idx.shape[0])
    for corner in itertools.product((-0.5, 0.5), repeat=k):
        d = np.asarray(corner)
        val = np.zeros(idx.shape[0])
        for pos, stack in enumerate(stacks):
            term = d[pos] * determinants(stack)
            val = val + term if pos % 2 == 0 else val - term
        best = np.maximum(best, val)
    return best


def listing_bounds(B: EmbeddingMatrix, max_enqueued: int, degeneracy_tol: float):
    """Subsets and their bounds, degenerate ones disabled by a huge sentinel."""
    idx = subsets(B.super_dim, B.phys_dim + 1)
    bound = corner_half_width(B, idx)
    degenerate = bound <= degeneracy_tol * bound.max()
    sentinel = max_enqueued * float(np.sum(B.matrix[0] ** 2))
    bound = np.where(degenerate, sentinel, bound)
    return idx, bound, degenerate


def listing_classify(idx, stacks, bound, v, tol):
    """(inside, on_boundary) for one displaced vector."""
    aa = np.abs(functional_values(idx, stacks, v))
    slack = tol * bound
    if np.any(aa > bound + slack):
        return False, False
    return True, bool(np.any(np.abs(aa - bound) <= slack))


def run_listing(B: EmbeddingMatrix, config: EngineConfig) -> tuple[PointSet, RunStats]:
    m = B.super_dim
    if config.super_dim != m:
        raise ValueError(f"dimension mismatch: embedding has M={m}, config {config.super_dim}")
    n = int(config.max_enqueued)
    tr = config.tr
    idx, bound, _ = listing_bounds(B, n, config.degeneracy_tol)
    stacks = _minor_stacks(B, idx)

    P = np.zeros((n, m), dtype=np.int64)
    P[0] = initial_point(tr)
    k = 1
    xs = np.empty((n, B.phys_dim))
    found = 0
    stats = RunStats()
    sources = []
    for i in range(n):
        if i >= k:
            break
        stats.analysed += 1
        v = P[i] - tr
        inside, on_boundary = listing_classify(idx, stacks, bound, v, config.boundary_tol)
        if not inside:
            continue
        x = B.matrix @ v
        if found == 0 or not np.any(np.all(np.abs(xs[:found] - x) <= config.dedup_tol, axis=1)):
            if on_boundary:
                stats.boundary_points += 1
            xs[found] = x
            sources.append(P[i].copy())
            found += 1
        for axis in range(m):
            for step in (-1, 1):
                w = P[i].copy()
                w[axis] += step
                seen = np.any(np.all(P[:k] == w, axis=1))
                if not seen and k < n:
                    P[k] = w
                    k += 1
    ps = PointSet(B.phys_dim, config.dedup_tol)
    for x, src in zip(xs[:found], sources):
        ps.insert(x, source=src)
    stats.obtained = len(ps)
    return ps, stats
