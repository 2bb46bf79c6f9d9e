"""Command line front end.

Exit codes: 0 success, 1 input or usage error, 2 construction error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .arc_spline import Polyline, fit_pairs, fit_spline
from .biarc_core import Tolerances
from .errors import BiarcError, ConstructionError, ParseError
from .joint_strategies import (
    CUBIC_MIDPOINT,
    CURVATURE_CONSTRAINED,
    EQUAL_CHORD,
    J_SHAPED,
    PARALLEL_TANGENT,
    StrategySpec,
)
from .toolpath_io import RunConfig, emit_arcjson, emit_gcode, emit_report, emit_svg, parse_input

STRATEGY_NAMES = {
    "equal-chord": EQUAL_CHORD,
    "parallel-tangent": PARALLEL_TANGENT,
    "j-shape": J_SHAPED,
    "cubic-midpoint": CUBIC_MIDPOINT,
    "curvature": CURVATURE_CONSTRAINED,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="biarcs", description="Fit biarcs and G1 arc splines to polylines or Hermite pairs.")
    p.add_argument("--input", required=True, type=Path, metavar="PATH")
    p.add_argument("--kind", choices=("polyline", "hermite"), default="polyline")
    p.add_argument("--closed", action="store_true", help="treat the polyline as closed")
    p.add_argument("--strategy", choices=tuple(STRATEGY_NAMES), default="equal-chord")
    p.add_argument("--radius", type=float, help="given signed radius (curvature strategy)")
    p.add_argument("--side", choices=("start", "end"), help="arc that receives --radius")
    p.add_argument("--fallback", default="equal-chord", metavar="LIST", help="comma separated strategies")
    p.add_argument("--out-json", type=Path, metavar="PATH")
    p.add_argument("--out-svg", type=Path, metavar="PATH")
    p.add_argument("--out-gcode", type=Path, metavar="PATH")
    p.add_argument("--out-figure", type=Path, metavar="PATH", help="render a PNG/PDF figure with matplotlib")
    p.add_argument("--precision", type=int, default=6, metavar="N")
    p.add_argument("--eps-angle", type=float, default=1e-9, metavar="X")
    p.add_argument("--eps-line", type=float, default=1e-9, metavar="X")
    p.add_argument("--report", action="store_true", help="print fallback counts and total length")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    kind = STRATEGY_NAMES[ns.strategy]
    fallback = []
    for name in filter(None, (s.strip() for s in ns.fallback.split(","))):
        if name not in STRATEGY_NAMES:
            raise UsageError(f"unknown fallback strategy {name!r}")
        fallback.append(STRATEGY_NAMES[name])
    if kind == CURVATURE_CONSTRAINED:
        if ns.radius is None:
            raise UsageError("--strategy curvature requires --radius")
        side = ns.side or "start"
    else:
        if ns.radius is not None or ns.side is not None:
            raise UsageError("--radius/--side only apply to --strategy curvature")
        side = None
    try:
        spec = StrategySpec(kind, ns.radius, side, tuple(fallback))
        return RunConfig(
            input_path=ns.input,
            kind=ns.kind,
            closed=ns.closed,
            spec=spec,
            out_json=ns.out_json,
            out_svg=ns.out_svg,
            out_gcode=ns.out_gcode,
            out_figure=ns.out_figure,
            precision=ns.precision,
            tol=Tolerances(ns.eps_angle, ns.eps_line),
            report=ns.report,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def run(cfg: RunConfig) -> int:
    data = parse_input(cfg.input_path, cfg.kind)
    polyline = None
    if isinstance(data, Polyline):
        if cfg.closed and not data.closed:
            data = Polyline(data.vertices, True)
        polyline = data
        spline = fit_spline(data, spec=cfg.spec, tol=cfg.tol)
    else:
        spline = fit_pairs([data], cfg.spec, False, cfg.tol)

    if cfg.out_json:
        cfg.out_json.write_text(emit_arcjson(spline, cfg.precision), encoding="utf-8")
    if cfg.out_svg:
        cfg.out_svg.write_text(emit_svg(spline, cfg.precision), encoding="utf-8")
    if cfg.out_gcode:
        cfg.out_gcode.write_text(emit_gcode(spline, cfg.precision), encoding="utf-8")
    if cfg.out_figure:
        from .plotting import save_figure

        save_figure(spline, cfg.out_figure, polyline, title=cfg.spec.kind.replace("_", " "))
    if cfg.report:
        sys.stdout.write(emit_report(spline, cfg.precision))
    return 0


def main(argv: list[str] | None = None) -> int:
    try:
        ns = build_parser().parse_args(argv)
        cfg = config_from_args(ns)
    except UsageError as exc:
        print(f"biarcs: error: {exc}", file=sys.stderr)
        return 1
    try:
        return run(cfg)
    except ParseError as exc:
        print(f"biarcs: input error: {exc}", file=sys.stderr)
        return 1
    except ConstructionError as exc:
        print(f"biarcs: construction error: {exc}", file=sys.stderr)
        return 2
    except BiarcError as exc:
        print(f"biarcs: input error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
