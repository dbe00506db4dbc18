"""Icosahedral cluster geometry and the embedding matrix of the superspace.

The embedding matrix ``B`` is a ``D x M`` array whose columns are the
physical-space images of the superspace basis vectors.  For the three-shell
icosahedral cluster each column is one vertex of a shell, taken up to the
inversion ``x -> -x``, so the 62 vertices are described by 31 columns.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TR, EngineConfig

TAU = (1.0 + np.sqrt(5.0)) / 2.0

ICOSA3_RADII = (1.0, 1.2, 1.5)


def build_rotation_c5() -> np.ndarray:
    """Rotation by 72 degrees that maps each of the three shells onto itself."""
    t = TAU
    return np.array(
        [
            [(t - 1) / 2, -t / 2, 1 / 2],
            [t / 2, 1 / 2, (t - 1) / 2],
            [-1 / 2, (t - 1) / 2, t / 2],
        ]
    )


# Each shell is a list of (unnormalized seed, orbit length under C5).  The
# seeds are scaled to the shell radius before the orbit is generated.
SHELL_SEEDS: dict[str, list[tuple[tuple[float, float, float], int]]] = {
    "icosahedron": [((1.0, TAU, 0.0), 5), ((0.0, 1.0, TAU), 1)],
    "dodecahedron": [((1.0, 1.0, 1.0), 5), ((1.0, -1.0, 1.0), 5)],
    "icosidodecahedron": [((1.0, 0.0, 0.0), 5), ((0.0, 1.0, 0.0), 5), ((0.0, 0.0, 1.0), 5)],
}

SHELL_VERTEX_COUNT = {"icosahedron": 12, "dodecahedron": 20, "icosidodecahedron": 30}


def build_shell(kind: str, radius: float, c5: np.ndarray | None = None) -> list[np.ndarray]:
    """Return the column vectors of one shell, half of its vertices.

    Columns follow the seed order of ``SHELL_SEEDS``; each seed is followed
    by its successive images under ``c5``.
    """
    if kind not in SHELL_SEEDS:
        raise ValueError(f"unknown shell kind {kind!r}")
    if not radius > 0:
        raise ValueError(f"shell radius must be positive, got {radius}")
    if c5 is None:
        c5 = build_rotation_c5()
    columns = []
    for seed, orbit_len in SHELL_SEEDS[kind]:
        v = np.asarray(seed, dtype=float)
        v = v * (radius / np.linalg.norm(v))
        for _ in range(orbit_len):
            columns.append(v)
            v = c5 @ v
    return columns


@dataclass(frozen=True)
class ClusterSpec:
    shells: tuple[tuple[str, float], ...]

    def __post_init__(self):
        object.__setattr__(self, "shells", tuple((str(k), float(r)) for k, r in self.shells))
        for kind, radius in self.shells:
            if kind not in SHELL_SEEDS:
                raise ValueError(f"unknown shell kind {kind!r}")
            if not radius > 0:
                raise ValueError(f"shell radius must be positive, got {radius}")

    @classmethod
    def icosa3(cls, r1: float = 1.0, r2: float = 1.2, r3: float = 1.5) -> "ClusterSpec":
        return cls((("icosahedron", r1), ("dodecahedron", r2), ("icosidodecahedron", r3)))

    @property
    def radii(self) -> tuple[float, ...]:
        return tuple(r for _, r in self.shells)


@dataclass(frozen=True)
class EmbeddingMatrix:
    """Column images of the superspace basis in physical space, shape (D, M)."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        if m.ndim == 1:
            m = m[np.newaxis, :]
        if m.ndim != 2:
            raise ValueError("embedding matrix must be two-dimensional")
        d, n = m.shape
        if not 1 <= d <= 3:
            raise ValueError(f"physical dimension must be 1, 2 or 3, got {d}")
        if n < d + 1:
            raise ValueError(f"superspace dimension {n} must exceed physical dimension {d}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def phys_dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def super_dim(self) -> int:
        return self.matrix.shape[1]

    @property
    def columns(self) -> np.ndarray:
        return self.matrix.T

    def gram_det(self) -> float:
        return float(np.linalg.det(self.matrix @ self.matrix.T))

    def scaled(self, factor: float) -> "EmbeddingMatrix":
        return EmbeddingMatrix(self.matrix * factor)


def build_embedding(spec: ClusterSpec) -> EmbeddingMatrix:
    if not spec.shells:
        raise ValueError("cluster spec has no shells")
    c5 = build_rotation_c5()
    columns = []
    for kind, radius in spec.shells:
        columns.extend(build_shell(kind, radius, c5))
    return EmbeddingMatrix(np.column_stack(columns))


def cluster_points(B: EmbeddingMatrix) -> np.ndarray:
    """All 2M cluster points: every column followed by its negation."""
    cols = B.columns
    return np.concatenate([cols, -cols])


PRESETS = ("icosa3", "fibonacci")


def preset(name: str) -> tuple[EmbeddingMatrix, EngineConfig]:
    if name == "icosa3":
        B = build_embedding(ClusterSpec.icosa3(*ICOSA3_RADII))
        return B, EngineConfig.for_dim(B.super_dim, DEFAULT_TR, max_enqueued=10000)
    if name == "fibonacci":
        B = EmbeddingMatrix(np.array([[1.0, TAU]]))
        return B, EngineConfig.for_dim(2, DEFAULT_TR, max_enqueued=200)
    raise ValueError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
