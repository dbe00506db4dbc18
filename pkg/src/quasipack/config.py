"""Run configuration shared by the presets, the engine and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DEFAULT_MAX_ENQUEUED = 10000
DEFAULT_TR = 0.1
# relative to each constraint's half-width
DEFAULT_BOUNDARY_TOL = 1e-9
# relative to the largest half-width
DEFAULT_DEGENERACY_TOL = 1e-12
# absolute, max-norm, physical length units
DEFAULT_DEDUP_TOL = 1e-8


def broadcast_tr(tr, super_dim: int) -> np.ndarray:
    """Return the strip translation as a float vector of length ``super_dim``.

    A scalar is broadcast to every component.
    """
    arr = np.asarray(tr, dtype=float)
    if arr.ndim == 0:
        return np.full(super_dim, float(arr))
    if arr.shape != (super_dim,):
        raise ValueError(
            f"translation has {arr.size} components, expected 1 or {super_dim}"
        )
    return arr.copy()


@dataclass(frozen=True)
class EngineConfig:
    tr: np.ndarray
    max_enqueued: int = DEFAULT_MAX_ENQUEUED
    boundary_tol: float = DEFAULT_BOUNDARY_TOL
    degeneracy_tol: float = DEFAULT_DEGENERACY_TOL
    dedup_tol: float = DEFAULT_DEDUP_TOL
    threads: int = field(default=1, compare=False)

    def __post_init__(self):
        tr = np.asarray(self.tr, dtype=float)
        if tr.ndim != 1:
            raise ValueError("tr must be a vector; use for_dim() to broadcast a scalar")
        object.__setattr__(self, "tr", tr)
        if int(self.max_enqueued) < 1:
            raise ValueError(f"max_enqueued must be >= 1, got {self.max_enqueued}")
        for name in ("boundary_tol", "degeneracy_tol", "dedup_tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if int(self.threads) < 1:
            raise ValueError("threads must be >= 1")

    @classmethod
    def for_dim(cls, super_dim: int, tr=DEFAULT_TR, **kwargs) -> "EngineConfig":
        return cls(tr=broadcast_tr(tr, super_dim), **kwargs)

    @property
    def super_dim(self) -> int:
        return self.tr.shape[0]
