"""Command-line interface: solve, enumerate, sweep, export.

Outputs are deterministic byte-for-byte for identical configurations: floats
are serialized with repr (shortest round-trip form), JSON keys are sorted,
and no timestamps or environment data are embedded.

Exit codes: 0 success, 2 configuration/domain error, 3 requested type not
realizable, 4 result-document validation failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import counts, finder, solids, sphtrig, unfold
from .solids import SolidKind, SolidSpec
from .sphtrig import PI, DomainError

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NOT_REALIZABLE = 3
EXIT_VALIDATION = 4

_KINDS = {
    "tetra": SolidKind.TETRAHEDRON,
    "octa": SolidKind.OCTAHEDRON,
    "cube": SolidKind.CUBE,
}


@dataclass(frozen=True)
class RunConfig:
    solid: SolidKind
    alpha: float
    ptype: Optional[Tuple[int, int]]
    max_crossings: int
    tol_closure: float
    tol_vertex: float
    out: Optional[str]
    fmt: str


def parse_alpha(text: str) -> float:
    """Accept decimal radians or a '<k>pi' literal such as '0.45pi'."""
    t = text.strip().lower()
    if t.endswith("pi"):
        head = t[:-2]
        factor = 1.0 if head in ("", "+") else float(head)
        return factor * PI
    return float(t)


def _parse_type(text: str) -> Tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"type must be 'p,q', got {text!r}")
    return int(parts[0]), int(parts[1])


# ---------------------------------------------------------------------------
# result documents


def class_to_doc(spec: SolidSpec, cls: finder.GeodesicClass) -> Dict:
    return {
        "canonical_sequence": list(cls.seq.edge_word()),
        "kind_tag": cls.tag,
        "total_length": cls.path.total_length,
        "closure_residual": cls.path.closure_residual,
        "crossings": [
            {"edge": c.edge, "t": c.t, "incidence_angle": c.incidence}
            for c in cls.path.crossings
        ],
        "orbit_size": cls.orbit_size,
    }


def bounds_to_doc(report: counts.CountReport) -> Dict:
    return {
        "c1": report.c1,
        "c2": report.c2,
        "N": report.n,
        "psi1": report.psi1,
        "psi2": report.psi2,
        "verdicts": [
            {"type": f"{v.p},{v.q}", "verdict": v.verdict, "found": v.found}
            for v in report.verdicts
        ],
    }


def result_document(
    spec: SolidSpec,
    classes: Sequence[finder.GeodesicClass],
    bounds: Optional[counts.CountReport],
) -> Dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "solid": spec.kind.value,
        "alpha": spec.alpha,
        "classes": [class_to_doc(spec, c) for c in classes],
        "bounds": bounds_to_doc(bounds) if bounds is not None else None,
    }


def dump_json(doc: Dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=1, separators=(",", ": ")) + "\n"


def _write_out(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# svg rendering (azimuthal equidistant projection about the geodesic's pole)


_SVG_SCALE = 120.0  # px per radian


def _project(pole, point) -> Tuple[float, float]:
    r = sphtrig.angle_between(pole, point)
    az = sphtrig.azimuth_about(pole, point)
    return r * math.cos(az), -r * math.sin(az)


def _path_cmd(points_2d: List[Tuple[float, float]], half: float) -> str:
    cmds = []
    for i, (x, y) in enumerate(points_2d):
        op = "M" if i == 0 else "L"
        cmds.append(f"{op} {half + _SVG_SCALE * x:.6f} {half + _SVG_SCALE * y:.6f}")
    return " ".join(cmds)


def render_svg(spec: SolidSpec, cls_doc: Dict) -> str:
    """Render the development of one class: face outlines plus the geodesic
    equator arc, projected so the geodesic shows as (part of) a circle."""
    seq = unfold.CrossingSequence.from_edges(spec, cls_doc["canonical_sequence"])
    path = finder.solve_sequence(spec, seq)
    if path is None:
        raise DomainError("document sequence does not solve at this angle")
    dev = unfold.develop(spec, seq)
    pole = path.pole
    n = spec.face_size
    half = _SVG_SCALE * PI + 20.0
    size = 2.0 * half
    samples = 24

    face_paths = []
    for placement in dev.placements[:-1]:
        pts: List[Tuple[float, float]] = []
        for j in range(n):
            a = sphtrig.mat_apply(placement, spec.chart[j])
            b = sphtrig.mat_apply(placement, spec.chart[(j + 1) % n])
            for k in range(samples):
                pts.append(_project(pole, sphtrig.slerp(a, b, k / samples)))
        pts.append(pts[0])
        face_paths.append(f'  <path d="{_path_cmd(pts, half)}"/>')

    hits = [sphtrig.pole_edge_crossing(pole, a, b) for a, b in dev.arcs]
    az0 = hits[0].azimuth
    theta = path.total_length
    e1, e2 = sphtrig.pole_frame(pole)
    geo_pts = []
    for k in range(10 * samples + 1):
        az = az0 + theta * k / (10 * samples)
        x = math.cos(az)
        y = math.sin(az)
        p = tuple(x * e1[i] + y * e2[i] for i in range(3))
        geo_pts.append(_project(pole, p))

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size:.0f}" height="{size:.0f}" '
        f'viewBox="0 0 {size:.0f} {size:.0f}">',
        '<g id="faces" fill="none" stroke="#334d80" stroke-width="1.2">',
        *face_paths,
        "</g>",
        '<g id="geodesic" fill="none" stroke="#c03030" stroke-width="2">',
        f'  <path d="{_path_cmd(geo_pts, half)}"/>',
        "</g>",
        "</svg>",
        "",
    ]
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# commands


def _build_spec(cfg: RunConfig) -> SolidSpec:
    return solids.build_solid(cfg.solid, cfg.alpha)


def cmd_solve(cfg: RunConfig) -> int:
    if cfg.solid is not SolidKind.TETRAHEDRON:
        print("solve drives the typed tetrahedron search; use enumerate for "
              "octa/cube", file=sys.stderr)
        return EXIT_CONFIG
    if cfg.ptype is None:
        print("solve requires --type p,q", file=sys.stderr)
        return EXIT_CONFIG
    spec = _build_spec(cfg)
    p, q = cfg.ptype
    if counts.necessary_excluded(p, q, cfg.alpha):
        print(f"type ({p},{q}) is excluded at alpha={cfg.alpha!r} "
              f"(s={counts.s_form(p, q)} >= g={counts.g_alpha(cfg.alpha)!r})",
              file=sys.stderr)
        return EXIT_NOT_REALIZABLE
    path = finder.solve_tetra_type(spec, p, q, cfg.tol_closure, cfg.tol_vertex)
    if path is None:
        print(f"type ({p},{q}) is not realizable at alpha={cfg.alpha!r}",
              file=sys.stderr)
        return EXIT_NOT_REALIZABLE
    seq = finder.canonicalize(spec, path.seq)
    cpath = finder.solve_sequence(spec, seq, cfg.tol_closure, cfg.tol_vertex)
    if cpath is None:
        # keep sequence and path consistent if canonical re-solve ever fails
        seq, cpath = path.seq, path
    cls = finder.GeodesicClass(
        seq=seq,
        path=cpath,
        orbit_size=finder.orbit_size(spec, seq),
        tag=f"{p},{q}",
    )
    report = counts.count_tetra(cfg.alpha)
    doc = result_document(spec, [cls], report)
    _write_out(dump_json(doc), cfg.out)
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig) -> int:
    spec = _build_spec(cfg)
    classes = finder.enumerate_classes(
        spec, cfg.max_crossings, tol_closure=cfg.tol_closure, tol_vertex=cfg.tol_vertex
    )
    bounds = None
    if cfg.solid is SolidKind.TETRAHEDRON:
        bounds = counts.count_tetra(cfg.alpha, cfg.max_crossings)
    doc = result_document(spec, classes, bounds)
    _write_out(dump_json(doc), cfg.out)
    return EXIT_OK


def cmd_sweep(cfg: RunConfig, alpha_stop: float, alpha_step: float) -> int:
    if cfg.solid is not SolidKind.TETRAHEDRON:
        print("sweep tabulates the tetrahedron type count", file=sys.stderr)
        return EXIT_CONFIG
    if alpha_step <= 0.0:
        print("sweep step must be positive", file=sys.stderr)
        return EXIT_CONFIG
    grid = []
    a = cfg.alpha
    while a <= alpha_stop + 1e-12:
        grid.append(a)
        a += alpha_step
    if not grid:
        print("empty sweep range", file=sys.stderr)
        return EXIT_CONFIG
    lo, hi = solids.ADMISSIBLE[SolidKind.TETRAHEDRON]
    rows = ["alpha_radians,N,c1,c2,types_found,types_excluded"]
    for a in grid:
        if not lo < a < hi:
            print(f"sweep alpha {a!r} outside ({lo!r}, {hi!r})", file=sys.stderr)
            return EXIT_CONFIG
        rep = counts.count_tetra(a)
        found = ";".join(f"{p}:{q}" for p, q in rep.realizable)
        missed = ";".join(
            f"{v.p}:{v.q}" for v in rep.verdicts if not v.found
        )
        rows.append(f"{a!r},{rep.n},{rep.c1!r},{rep.c2!r},{found},{missed}")
    _write_out("\n".join(rows) + "\n", cfg.out)
    return EXIT_OK


def cmd_export(cfg: RunConfig, in_path: str, class_index: int) -> int:
    try:
        with open(in_path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"cannot read result document: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if doc.get("schema_version") != SCHEMA_VERSION:
        print("unsupported schema_version", file=sys.stderr)
        return EXIT_VALIDATION
    classes = doc.get("classes") or []
    if not classes:
        print("result document has no classes to draw", file=sys.stderr)
        return EXIT_CONFIG
    if not 0 <= class_index < len(classes):
        print(f"class index {class_index} out of range", file=sys.stderr)
        return EXIT_CONFIG
    cls_doc = classes[class_index]
    if not cls_doc["closure_residual"] <= cfg.tol_closure:
        print(
            f"document closure residual {cls_doc['closure_residual']!r} exceeds "
            f"tolerance {cfg.tol_closure!r}; refusing to draw",
            file=sys.stderr,
        )
        return EXIT_VALIDATION
    try:
        spec = solids.build_solid(_KINDS[doc["solid"]], float(doc["alpha"]))
        svg = render_svg(spec, cls_doc)
    except (KeyError, DomainError, ValueError) as exc:
        print(f"invalid result document: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    _write_out(svg, cfg.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def _make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sphgeo",
        description="Simple closed geodesics on regular spherical tetrahedra, "
        "octahedra and cubes.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(
        p: argparse.ArgumentParser, need_solid: bool = True, fmt: str = "json"
    ) -> None:
        if need_solid:
            p.add_argument("--solid", required=True, choices=sorted(_KINDS))
            p.add_argument("--alpha", required=True,
                           help="facet angle: radians or '<k>pi' (e.g. 0.45pi)")
        p.add_argument("--depth", type=int, default=12,
                       help="max crossings searched (default 12)")
        p.add_argument("--tol-closure", type=float, default=1e-9)
        p.add_argument("--tol-vertex", type=float, default=1e-9)
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--format", default=fmt, choices=["json", "csv", "svg"])
        p.set_defaults(native_format=fmt)

    p_solve = sub.add_parser("solve", help="solve one tetrahedron type (p,q)")
    common(p_solve)
    p_solve.add_argument("--type", default=None, help="tetrahedron type 'p,q'")

    p_enum = sub.add_parser("enumerate", help="find all geodesic classes")
    common(p_enum)

    p_sweep = sub.add_parser("sweep", help="tabulate N, c1, c2 over an alpha range")
    common(p_sweep, fmt="csv")
    p_sweep.add_argument("--alpha-stop", required=True,
                         help="inclusive end of the alpha range")
    p_sweep.add_argument("--alpha-step", required=True,
                         help="grid step (radians or '<k>pi')")

    p_exp = sub.add_parser("export", help="render a result document to SVG")
    common(p_exp, need_solid=False, fmt="svg")
    p_exp.add_argument("--in", dest="in_path", required=True,
                       help="result JSON produced by solve/enumerate")
    p_exp.add_argument("--class-index", type=int, default=0)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = _make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    if args.format != args.native_format:
        print(
            f"{args.command} writes {args.native_format}; "
            f"--format {args.format} is not supported here",
            file=sys.stderr,
        )
        return EXIT_CONFIG

    try:
        if args.command == "export":
            cfg = RunConfig(
                solid=SolidKind.TETRAHEDRON,  # unused by export
                alpha=0.0,
                ptype=None,
                max_crossings=args.depth,
                tol_closure=args.tol_closure,
                tol_vertex=args.tol_vertex,
                out=args.out,
                fmt=args.format,
            )
            return cmd_export(cfg, args.in_path, args.class_index)

        if args.solid not in _KINDS:
            print(f"unknown solid {args.solid!r}", file=sys.stderr)
            return EXIT_CONFIG
        kind = _KINDS[args.solid]
        alpha = parse_alpha(args.alpha)
        ptype = _parse_type(args.type) if getattr(args, "type", None) else None
        if getattr(args, "depth", 12) < 3:
            print("--depth must be at least 3", file=sys.stderr)
            return EXIT_CONFIG
        if args.tol_closure <= 0 or args.tol_vertex <= 0:
            print("tolerances must be positive", file=sys.stderr)
            return EXIT_CONFIG
        lo, hi = solids.ADMISSIBLE[kind]
        if not lo < alpha < hi:
            print(
                f"alpha={alpha!r} outside the admissible interval "
                f"({lo!r}, {hi!r}) for {args.solid}",
                file=sys.stderr,
            )
            return EXIT_CONFIG
        cfg = RunConfig(
            solid=kind,
            alpha=alpha,
            ptype=ptype,
            max_crossings=args.depth,
            tol_closure=args.tol_closure,
            tol_vertex=args.tol_vertex,
            out=args.out,
            fmt=args.format,
        )
        if args.command == "solve":
            return cmd_solve(cfg)
        if args.command == "enumerate":
            return cmd_enumerate(cfg)
        if args.command == "sweep":
            return cmd_sweep(cfg, parse_alpha(args.alpha_stop),
                             parse_alpha(args.alpha_step))
        print(f"unknown command {args.command!r}", file=sys.stderr)
        return EXIT_CONFIG
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
