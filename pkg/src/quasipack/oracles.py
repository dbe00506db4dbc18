"""Independent checks of strip membership and of the generated sets.

None of these go through the subset minors: membership is decided by a
linear feasibility search on the strip's definition (a point of the unit
cube plus a physical-space vector), and low-dimensional outputs are checked
by exhaustive enumeration or against the Fibonacci substitution word.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .cluster import EmbeddingMatrix
from .lattice import PointSet
from .strip import ConstraintSet, classify_many

WITNESS_TOL = 1e-8
BOX_LIMIT = 10**7


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    y: np.ndarray | None = None
    c: np.ndarray | None = None


def _phase_one(A: np.ndarray, b: np.ndarray, lower: np.ndarray, upper: np.ndarray, x0: np.ndarray,
               eps: float = 1e-12, max_iter: int = 10000):
    """Bounded-variable phase-one simplex for ``A x = b``, ``lower <= x <= upper``.

    ``x0`` gives the starting values of the structural variables, each at a
    finite bound or at zero if free.  One artificial per row absorbs the
    residual; their sum is minimized with Bland's rule.  Returns the final
    structural values and the remaining infeasibility.
    """
    m, n = A.shape
    r = b - A @ x0
    sign = np.where(r >= 0, 1.0, -1.0)
    A_full = np.hstack([A, np.diag(sign)])
    lo = np.concatenate([lower, np.zeros(m)])
    hi = np.concatenate([upper, np.full(m, np.inf)])
    x = np.concatenate([x0, np.abs(r)])
    cost = np.concatenate([np.zeros(n), np.ones(m)])
    basis = list(range(n, n + m))
    in_basis = np.zeros(n + m, dtype=bool)
    in_basis[basis] = True

    for _ in range(max_iter):
        Bm = A_full[:, basis]
        duals = np.linalg.solve(Bm.T, cost[basis])
        reduced = cost - duals @ A_full
        entering, direction = None, 0.0
        for j in range(n + m):
            if in_basis[j]:
                continue
            dj = reduced[j]
            can_up = x[j] < hi[j] - eps
            can_down = x[j] > lo[j] + eps
            if dj < -eps and can_up:
                entering, direction = j, 1.0
                break
            if dj > eps and can_down:
                entering, direction = j, -1.0
                break
        if entering is None:
            break
        col = np.linalg.solve(Bm, A_full[:, entering])
        # basic variables move by -direction * col per unit step
        delta = -direction * col
        step = hi[entering] - lo[entering]
        leave_pos, leave_bound = None, None
        for pos, var in enumerate(basis):
            if delta[pos] < -eps:
                t = (x[var] - lo[var]) / -delta[pos]
                bound = lo[var]
            elif delta[pos] > eps:
                t = (hi[var] - x[var]) / delta[pos]
                bound = hi[var]
            else:
                continue
            t = max(t, 0.0)
            if t < step - eps or (leave_pos is not None and abs(t - step) <= eps and var < basis[leave_pos]):
                step, leave_pos, leave_bound = t, pos, bound
        if not np.isfinite(step):
            raise RuntimeError("phase-one problem is unbounded")
        x[entering] += direction * step
        for pos, var in enumerate(basis):
            x[var] += delta[pos] * step
        if leave_pos is not None:
            leaving = basis[leave_pos]
            x[leaving] = leave_bound
            in_basis[leaving] = False
            basis[leave_pos] = entering
            in_basis[entering] = True
        else:
            x[entering] = hi[entering] if direction > 0 else lo[entering]
    else:
        raise RuntimeError("phase-one simplex did not converge")
    return x[:n], float(x[n:].sum())


def lp_strip_membership(B: EmbeddingMatrix, displaced, tol: float = 1e-9) -> FeasibilityResult:
    """Decide whether ``displaced = y + B^T c`` with ``|y_i| <= 1/2 + tol``."""
    v = np.asarray(displaced, dtype=float)
    d, m = B.phys_dim, B.super_dim
    if v.shape != (m,):
        raise ValueError(f"displaced vector must have length {m}")
    h = 0.5 + tol
    A = np.hstack([np.eye(m), B.matrix.T])
    lower = np.concatenate([np.full(m, -h), np.full(d, -np.inf)])
    upper = np.concatenate([np.full(m, h), np.full(d, np.inf)])
    # nonbasic start: each y at the bound on v's side, c at zero
    x0 = np.concatenate([np.where(v >= 0, h, -h), np.zeros(d)])
    x, _ = _phase_one(A, v, lower, upper, x0)
    y, c = np.clip(x[:m], -h, h), x[m:]
    if np.max(np.abs(v - y - B.matrix.T @ c)) <= WITNESS_TOL:
        return FeasibilityResult(True, y, c)
    return FeasibilityResult(False)


def box_scan(B: EmbeddingMatrix, cs: ConstraintSet, radius: int, tr, dedup_tol: float = 1e-8) -> PointSet:
    """Classify every lattice point with all coordinates in [-radius, radius]."""
    m = B.super_dim
    if (2 * radius + 1) ** m > BOX_LIMIT:
        raise ValueError(f"box of radius {radius} in dimension {m} is too large to scan")
    tr = np.broadcast_to(np.asarray(tr, dtype=float), (m,))
    lattice = np.array(list(itertools.product(range(-radius, radius + 1), repeat=m)), dtype=np.int64)
    inside, _ = classify_many(lattice - tr, cs)
    ps = PointSet(B.phys_dim, dedup_tol)
    for p in lattice[inside]:
        ps.insert(B.matrix @ (p - tr), source=p)
    return ps


def perp_residual(B: EmbeddingMatrix, displaced) -> np.ndarray:
    """Component of ``displaced`` orthogonal to the row span of ``B``."""
    v = np.asarray(displaced, dtype=float)
    gram = B.matrix @ B.matrix.T
    if np.linalg.det(gram) <= 1e-10:
        raise ValueError("embedding matrix is rank deficient")
    coeffs = np.linalg.solve(gram, B.matrix @ v)
    return v - B.matrix.T @ coeffs


def fibonacci_word(n: int) -> str:
    """n-th iterate of L -> LS, S -> L starting from L."""
    if n < 1:
        raise ValueError("n must be >= 1")
    word = "L"
    for _ in range(n - 1):
        word = "".join("LS" if ch == "L" else "L" for ch in word)
    return word


def gap_word(sorted_x: np.ndarray, rel_tol: float = 1e-9) -> tuple[str, float, float]:
    """Classify consecutive gaps of a sorted 1-D set as L (long) or S (short).

    Returns the word and the two gap lengths; raises if there are not
    exactly two distinct gaps.
    """
    gaps = np.diff(np.asarray(sorted_x, dtype=float))
    distinct: list[float] = []
    for g in gaps:
        if not any(abs(g - u) <= rel_tol * max(abs(u), 1.0) for u in distinct):
            distinct.append(float(g))
    if len(distinct) != 2:
        raise ValueError(f"expected two gap lengths, found {len(distinct)}")
    short, long_ = sorted(distinct)
    word = "".join("L" if abs(g - long_) <= rel_tol * long_ else "S" for g in gaps)
    return word, long_, short
