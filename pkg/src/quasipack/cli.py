"""Command-line front end.

    quasipack [generate] [options]     write the point set
    quasipack benchmark [options]      time the fast path against the naive one
"""

from __future__ import annotations

import argparse
import sys
from contextlib import nullcontext
from dataclasses import dataclass

from .cluster import ICOSA3_RADII, PRESETS, ClusterSpec, EmbeddingMatrix, build_embedding, preset
from .config import (
    DEFAULT_BOUNDARY_TOL,
    DEFAULT_DEDUP_TOL,
    DEFAULT_DEGENERACY_TOL,
    EngineConfig,
    broadcast_tr,
)
from .io import WRITERS, report_stats
from .lattice import run
from .strip import build_constraints

FORMATS = tuple(WRITERS)


@dataclass
class Request:
    command: str
    preset: str
    spec: ClusterSpec | None
    B: EmbeddingMatrix
    config: EngineConfig
    fmt: str
    out: str


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasipack",
        description="Quasiperiodic packings of icosahedral clusters by strip projection.",
    )
    parser.add_argument("command", nargs="?", default="generate", choices=("generate", "benchmark"))
    parser.add_argument("--preset", choices=PRESETS, default="icosa3")
    parser.add_argument("--r1", type=_positive_float, help=f"icosahedron radius (default {ICOSA3_RADII[0]})")
    parser.add_argument("--r2", type=_positive_float, help=f"dodecahedron radius (default {ICOSA3_RADII[1]})")
    parser.add_argument("--r3", type=_positive_float, help=f"icosidodecahedron radius (default {ICOSA3_RADII[2]})")
    parser.add_argument("--tr", default=None,
                        help="strip translation: one number for all components or M comma-separated numbers")
    parser.add_argument("--max-points", type=_positive_int, default=None,
                        help="cap on enqueued lattice points (default: preset value, 10000 for icosa3)")
    parser.add_argument("--boundary-tol", type=_positive_float, default=DEFAULT_BOUNDARY_TOL)
    parser.add_argument("--dedup-tol", type=_positive_float, default=DEFAULT_DEDUP_TOL)
    parser.add_argument("--degeneracy-tol", type=_positive_float, default=DEFAULT_DEGENERACY_TOL)
    parser.add_argument("--format", dest="fmt", choices=FORMATS, default=None,
                        help="output format (default graphics3d in 3D, csv otherwise)")
    parser.add_argument("--out", default="-", help="output file, '-' for stdout")
    parser.add_argument("--threads", type=_positive_int, default=1)
    return parser


def _parse_tr(text: str | None, default, super_dim: int):
    if text is None:
        return broadcast_tr(default, super_dim)
    try:
        values = [float(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed --tr value {text!r}")
    return broadcast_tr(values[0] if len(values) == 1 else values, super_dim)


def parse_cli(args=None) -> Request:
    parser = build_parser()
    ns = parser.parse_args(args)
    radii = (ns.r1, ns.r2, ns.r3)
    spec = None
    if ns.preset == "icosa3":
        B, defaults = preset("icosa3")
        if any(r is not None for r in radii):
            spec = ClusterSpec.icosa3(*(d if r is None else r for r, d in zip(radii, ICOSA3_RADII)))
            B = build_embedding(spec)
        else:
            spec = ClusterSpec.icosa3(*ICOSA3_RADII)
    else:
        if any(r is not None for r in radii):
            parser.error(f"--r1/--r2/--r3 do not apply to preset {ns.preset!r}")
        B, defaults = preset(ns.preset)
    try:
        tr = _parse_tr(ns.tr, defaults.tr, B.super_dim)
    except ValueError as exc:
        parser.error(str(exc))
    fmt = ns.fmt or ("graphics3d" if B.phys_dim == 3 else "csv")
    if fmt == "graphics3d" and B.phys_dim != 3:
        parser.error("graphics3d output needs a three-dimensional embedding")
    config = EngineConfig(
        tr=tr,
        max_enqueued=ns.max_points or defaults.max_enqueued,
        boundary_tol=ns.boundary_tol,
        degeneracy_tol=ns.degeneracy_tol,
        dedup_tol=ns.dedup_tol,
        threads=ns.threads,
    )
    return Request(ns.command, ns.preset, spec, B, config, fmt, ns.out)


def _metadata(req: Request, stats) -> dict:
    return {
        "preset": req.preset,
        "radii": list(req.spec.radii) if req.spec else None,
        "tr": [float(t) for t in req.config.tr],
        "max_enqueued": req.config.max_enqueued,
        "stats": {
            "analysed": stats.analysed,
            "obtained": stats.obtained,
            "boundary_points": stats.boundary_points,
        },
    }


def _open_out(path: str):
    if path == "-":
        return nullcontext(sys.stdout)
    return open(path, "w", encoding="ascii", newline="\n")


def generate(req: Request) -> int:
    cs = build_constraints(req.B, req.config.degeneracy_tol)
    points, stats = run(req.B, cs, req.config)
    report = sys.stderr if req.out == "-" else sys.stdout
    report_stats(stats, report)
    if stats.obtained == 0 and req.fmt == "graphics3d":
        print("error: nothing to write in graphics3d format", file=sys.stderr)
        return 1
    with _open_out(req.out) as sink:
        WRITERS[req.fmt](points.sorted_points(), sink, _metadata(req, stats))
    return 0


def run_benchmark(req: Request) -> int:
    from .benchmark import benchmark

    result = benchmark(req.B, req.config)
    with _open_out(req.out) as sink:
        result.write(sink)
    return 0 if result.identical else 1


def main(argv=None) -> int:
    req = parse_cli(argv)
    try:
        if req.command == "benchmark":
            return run_benchmark(req)
        return generate(req)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
