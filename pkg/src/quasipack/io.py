"""Point-cloud writers and the run report."""

from __future__ import annotations

import json
from typing import Any, TextIO

import numpy as np

from .lattice import RunStats

GRAPHICS3D_HEADER = "Show[Graphics3D[{ PointSize[0.01],{"
GRAPHICS3D_TRAILER = "}} ]]"
AXES = ("x", "y", "z")


def fortran_f10_5(value: float) -> str:
    """Format like the Fortran edit descriptor F10.5 (asterisks on overflow)."""
    s = f"{value:.5f}"
    if len(s) > 10:
        return "*" * 10
    return s.rjust(10)


def graphics3d_lines(points) -> list[str]:
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 3:
        raise ValueError("graphics3d output needs three-dimensional points")
    if len(pts) == 0:
        raise ValueError("graphics3d output needs at least one point")
    lines = [GRAPHICS3D_HEADER]
    for k, (x, y, z) in enumerate(pts):
        tail = "}]" if k == len(pts) - 1 else "}], "
        lines.append("Point[{" + fortran_f10_5(x) + "," + fortran_f10_5(y) + "," + fortran_f10_5(z) + tail)
    lines.append(GRAPHICS3D_TRAILER)
    return lines


def write_graphics3d(points, sink: TextIO) -> int:
    """Write a Mathematica ``Show[Graphics3D[...]]`` expression; return bytes written."""
    text = "".join(line + "\n" for line in graphics3d_lines(points))
    sink.write(text)
    return len(text.encode("ascii"))


def _padded(points) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1:
        pts = pts[:, np.newaxis]
    if pts.shape[1] < 3:
        pts = np.hstack([pts, np.zeros((len(pts), 3 - pts.shape[1]))])
    return pts


def write_xyz(points, sink: TextIO, comment: str = "quasipack strip projection") -> None:
    pts = _padded(points)
    sink.write(f"{len(pts)}\n")
    sink.write(comment.replace("\n", " ") + "\n")
    for x, y, z in pts:
        sink.write(f"Q {x:.17g} {y:.17g} {z:.17g}\n")


def write_csv(points, sink: TextIO) -> None:
    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1:
        pts = pts[:, np.newaxis]
    dim = pts.shape[1]
    sink.write(",".join(AXES[:dim]) + "\n")
    for row in pts:
        sink.write(",".join(repr(float(c)) for c in row) + "\n")


def write_json(points, sink: TextIO, metadata: dict[str, Any] | None = None) -> None:
    pts = np.asarray(points, dtype=float)
    doc = dict(metadata or {})
    doc["points"] = [[float(c) for c in row] for row in pts.reshape(len(pts), -1)]
    json.dump(doc, sink, indent=1)
    sink.write("\n")


def read_json_points(source: TextIO) -> np.ndarray:
    return np.array(json.load(source)["points"], dtype=float)


WRITERS = {
    "graphics3d": lambda pts, sink, meta: write_graphics3d(pts, sink),
    "xyz": lambda pts, sink, meta: write_xyz(pts, sink),
    "csv": lambda pts, sink, meta: write_csv(pts, sink),
    "json": lambda pts, sink, meta: write_json(pts, sink, meta),
}


def report_stats(stats: RunStats, sink: TextIO) -> None:
    # FRONTIER is also printed as FRONTIERE by the original program
    sink.write(f"NUMBER OF ANALYSED POINTS : {stats.analysed}\n")
    sink.write(f"NUMBER OF OBTAINED POINTS : {stats.obtained}\n")
    sink.write(f"NUMBER OF POINTS LYING ON THE FRONTIER OF THE STRIP: {stats.boundary_points}\n")
    if stats.obtained == 0:
        sink.write("empty output: no lattice point was accepted\n")
    if stats.boundary_points > 0:
        sink.write(
            "warning: points lie on the strip boundary (singular translation); "
            "perturb --tr for an unambiguous set\n"
        )
