"""Facet description of the acceptance strip and point classification.

The strip is the unit hypercube ``[-1/2, 1/2]^M`` swept along the physical
subspace spanned by the rows of ``B``.  For every (D+1)-subset of columns the
signed D x D minors of ``B`` give a linear functional ``L`` on the superspace
that vanishes on the physical subspace; a displaced vector ``v`` lies in the
strip iff ``|L(v)| <= half_width`` for every subset.
"""

from __future__ import annotations

import enum
import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from math import comb

import numpy as np

from .cluster import EmbeddingMatrix
from .config import DEFAULT_BOUNDARY_TOL, DEFAULT_DEGENERACY_TOL

CHUNK_ROWS = 512


def determinants(stack: np.ndarray) -> np.ndarray:
    """Determinants of a stack of square matrices, shape (..., D, D).

    Small sizes use the explicit expansion so every caller gets bitwise
    identical values for identical inputs.
    """
    d = stack.shape[-1]
    if d == 1:
        return stack[..., 0, 0].copy()
    if d == 2:
        return stack[..., 0, 0] * stack[..., 1, 1] - stack[..., 0, 1] * stack[..., 1, 0]
    if d == 3:
        a = stack
        return (
            a[..., 0, 0] * a[..., 1, 1] * a[..., 2, 2]
            + a[..., 1, 0] * a[..., 2, 1] * a[..., 0, 2]
            + a[..., 2, 0] * a[..., 0, 1] * a[..., 1, 2]
            - a[..., 2, 0] * a[..., 1, 1] * a[..., 0, 2]
            - a[..., 0, 0] * a[..., 2, 1] * a[..., 1, 2]
            - a[..., 1, 0] * a[..., 0, 1] * a[..., 2, 2]
        )
    return np.linalg.det(stack)


def _check_indices(indices, phys_dim: int, super_dim: int) -> np.ndarray:
    idx = np.asarray(indices)
    if idx.ndim != 1 or idx.shape[0] != phys_dim + 1:
        raise ValueError(f"expected {phys_dim + 1} column indices, got {indices!r}")
    if not np.issubdtype(idx.dtype, np.integer):
        raise ValueError(f"column indices must be integers, got {indices!r}")
    if np.any(np.diff(idx) <= 0) or idx[0] < 0 or idx[-1] >= super_dim:
        raise ValueError(f"column indices must be strictly increasing in [0, {super_dim})")
    return idx


def _subset_cofactors(matrix: np.ndarray, idx: np.ndarray) -> np.ndarray:
    """Cofactors for a batch of subsets, idx of shape (n, D+1)."""
    k = idx.shape[1]
    out = np.empty(idx.shape, dtype=float)
    for pos in range(k):
        others = np.delete(idx, pos, axis=1)
        # (D, n, D) -> (n, D, D) with the subset columns as matrix columns
        minors = determinants(np.transpose(matrix[:, others], (1, 0, 2)))
        out[:, pos] = minors if pos % 2 == 0 else -minors
    return out


def subset_cofactors(B: EmbeddingMatrix, indices) -> np.ndarray:
    """Signed D x D minors of ``B`` over a (D+1)-subset of columns (0-based).

    ``cofactors[k] = (-1)**k * det(B restricted to the other D indices)``, so
    that ``sum_k cofactors[k] * v[indices[k]]`` is the determinant of the
    (D+1) x (D+1) matrix with first row ``v`` and remaining rows ``B``.
    """
    idx = _check_indices(indices, B.phys_dim, B.super_dim)
    return _subset_cofactors(B.matrix, idx[np.newaxis, :])[0]


def half_width(cofactors) -> float | np.ndarray:
    """Largest value of the functional over the corners of the centred unit cube."""
    return 0.5 * np.abs(np.asarray(cofactors, dtype=float)).sum(axis=-1)


@dataclass(frozen=True)
class StripConstraint:
    indices: tuple[int, ...]
    cofactors: tuple[float, ...]
    half_width: float

    def value(self, displaced) -> float:
        v = np.asarray(displaced, dtype=float)
        return float(np.dot(v[list(self.indices)], self.cofactors))


class Status(enum.Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class Membership:
    status: Status
    on_boundary: bool = False

    def __post_init__(self):
        if self.on_boundary and self.status is not Status.INSIDE:
            raise ValueError("only inside points can lie on the boundary")

    @property
    def inside(self) -> bool:
        return self.status is Status.INSIDE


class ConstraintSet:
    """Flat arrays of (indices, cofactors, half_width) records.

    ``indices`` are 0-based column numbers, one row per constraint.
    """

    def __init__(self, phys_dim, super_dim, indices, cofactors, half_widths, degenerate_count=0):
        self.phys_dim = int(phys_dim)
        self.super_dim = int(super_dim)
        self.indices = np.asarray(indices, dtype=np.intp).reshape(-1, self.phys_dim + 1)
        self.cofactors = np.asarray(cofactors, dtype=float).reshape(self.indices.shape)
        self.half_widths = np.asarray(half_widths, dtype=float).reshape(-1)
        self.degenerate_count = int(degenerate_count)
        if self.half_widths.shape[0] != self.indices.shape[0]:
            raise ValueError("one half-width per constraint required")

    def __len__(self) -> int:
        return self.indices.shape[0]

    @property
    def constraints(self) -> list[StripConstraint]:
        return [
            StripConstraint(tuple(int(i) for i in idx), tuple(float(c) for c in cof), float(h))
            for idx, cof, h in zip(self.indices, self.cofactors, self.half_widths)
        ]

    @cached_property
    def functionals(self) -> np.ndarray:
        """Dense (M, n) matrix whose column j evaluates constraint j."""
        n = len(self)
        f = np.zeros((self.super_dim, n))
        cols = np.arange(n)
        for pos in range(self.phys_dim + 1):
            f[self.indices[:, pos], cols] = self.cofactors[:, pos]
        return f

    @cached_property
    def normalized_functionals(self) -> np.ndarray:
        """Functionals divided by their half-widths; the strip is ``max |v @ F| <= 1``."""
        return self.functionals / self.half_widths

    def values(self, displaced: np.ndarray) -> np.ndarray:
        """Functional values, shape (k, n) for k displaced vectors (k, M)."""
        return displaced @ self.functionals


def build_constraints(B: EmbeddingMatrix, degeneracy_tol: float = DEFAULT_DEGENERACY_TOL) -> ConstraintSet:
    d, m = B.phys_dim, B.super_dim
    total = comb(m, d + 1)
    flat = np.fromiter(
        itertools.chain.from_iterable(itertools.combinations(range(m), d + 1)),
        dtype=np.intp,
        count=total * (d + 1),
    )
    idx = flat.reshape(total, d + 1)
    cof = _subset_cofactors(B.matrix, idx)
    hw = half_width(cof)
    biggest = hw.max() if total else 0.0
    keep = hw > degeneracy_tol * biggest
    return ConstraintSet(d, m, idx[keep], cof[keep], hw[keep], int(total - keep.sum()))


def _classify_block(ratios: np.ndarray, tol: float):
    # ratios are L(v) / half_width, so the strip is max |ratio| <= 1
    peak = np.maximum(ratios.max(axis=1), -ratios.min(axis=1))
    inside = peak <= 1.0 + tol
    boundary = inside & (peak >= 1.0 - tol)
    return inside, boundary


def classify_many(
    displaced: np.ndarray,
    cs: ConstraintSet,
    boundary_tol: float = DEFAULT_BOUNDARY_TOL,
    threads: int = 1,
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized classification of k displaced vectors.

    Returns ``(inside, on_boundary)`` boolean arrays of length k.  Rows are
    processed in fixed-size chunks, so results do not depend on ``threads``.
    """
    v = np.asarray(displaced, dtype=float)
    if v.ndim != 2 or v.shape[1] != cs.super_dim:
        raise ValueError(f"expected displaced vectors of length {cs.super_dim}")
    k = v.shape[0]
    inside = np.ones(k, dtype=bool)
    boundary = np.zeros(k, dtype=bool)
    if len(cs) == 0 or k == 0:
        return inside, boundary
    f = cs.normalized_functionals

    def work(start):
        block = v[start:start + CHUNK_ROWS]
        return start, _classify_block(block @ f, boundary_tol)

    starts = range(0, k, CHUNK_ROWS)
    if threads > 1 and k > CHUNK_ROWS:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(work, starts))
    else:
        results = [work(s) for s in starts]
    for start, (ins, bnd) in results:
        inside[start:start + ins.shape[0]] = ins
        boundary[start:start + bnd.shape[0]] = bnd
    return inside, boundary


def classify(displaced, cs: ConstraintSet, boundary_tol: float = DEFAULT_BOUNDARY_TOL) -> Membership:
    v = np.asarray(displaced, dtype=float)
    if v.shape != (cs.super_dim,):
        raise ValueError(f"displaced vector must have length {cs.super_dim}, got shape {v.shape}")
    inside, boundary = classify_many(v[np.newaxis, :], cs, boundary_tol)
    if not inside[0]:
        return Membership(Status.OUTSIDE)
    return Membership(Status.INSIDE, bool(boundary[0]))


def project(B: EmbeddingMatrix, displaced) -> np.ndarray:
    v = np.asarray(displaced, dtype=float)
    if v.shape[-1] != B.super_dim:
        raise ValueError(f"displaced vector must have length {B.super_dim}")
    return v @ B.matrix.T
