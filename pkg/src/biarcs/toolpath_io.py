"""Input parsing and output writers: arc-JSON, SVG, G-code and a TSV report.

All writers are deterministic: identical splines give byte-identical text.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from decimal import Decimal
from pathlib import Path

from .arc_spline import ArcSpline, EdgeRecord, Polyline
from .biarc_core import DEFAULT_TOL, ArcSegment, Biarc, G1Pair, Tolerances
from .errors import DomainError, ParseError
from .joint_strategies import StrategySpec
from .symplectic2d import Vec2, rotate

DEFAULT_PRECISION = 6


@dataclass
class RunConfig:
    input_path: Path
    kind: str = "polyline"
    closed: bool = False
    spec: StrategySpec = field(default_factory=StrategySpec)
    out_json: Path | None = None
    out_svg: Path | None = None
    out_gcode: Path | None = None
    out_figure: Path | None = None
    precision: int = DEFAULT_PRECISION
    tol: Tolerances = DEFAULT_TOL
    report: bool = False

    def __post_init__(self) -> None:
        if self.kind not in ("polyline", "hermite"):
            raise ValueError(f"unknown input kind {self.kind!r}")
        if not 3 <= self.precision <= 17:
            raise ValueError("precision must be within [3, 17]")
        if not any((self.out_json, self.out_svg, self.out_gcode, self.out_figure, self.report)):
            raise ValueError("no output requested")


# ---------------------------------------------------------------- numbers


def fmt_sig(x: float, digits: int = DEFAULT_PRECISION) -> str:
    """Shortest plain decimal (no exponent) for ``x`` rounded to ``digits``
    significant digits."""
    v = float(f"{x:.{digits}g}")
    if v == 0.0:
        return "0"
    s = format(Decimal(repr(v)).normalize(), "f")
    return s


def round_sig(x: float, digits: int = DEFAULT_PRECISION) -> float:
    v = float(f"{x:.{digits}g}")
    return 0.0 if v == 0.0 else v


def fmt_fixed(x: float, decimals: int = DEFAULT_PRECISION) -> str:
    s = f"{x:.{decimals}f}"
    if "." in s:
        s = s.rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


# ---------------------------------------------------------------- input


def _point(obj, where: str) -> Vec2:
    if (
        not isinstance(obj, (list, tuple))
        or len(obj) != 2
        or not all(isinstance(t, (int, float)) and not isinstance(t, bool) for t in obj)
    ):
        raise ParseError(f"{where}: expected [x, y], got {obj!r}")
    try:
        return Vec2(float(obj[0]), float(obj[1]))
    except DomainError as exc:
        raise ParseError(f"{where}: {exc}") from None


def parse_document(doc, kind: str) -> Polyline | G1Pair:
    if not isinstance(doc, dict):
        raise ParseError("top level: expected an object")
    if kind == "polyline":
        verts = doc.get("vertices")
        if not isinstance(verts, list):
            raise ParseError("vertices: expected a list of [x, y]")
        closed = doc.get("closed", False)
        if not isinstance(closed, bool):
            raise ParseError("closed: expected true or false")
        pts = [_point(v, f"vertices[{i}]") for i, v in enumerate(verts)]
        if len(pts) < 2:
            raise ParseError(f"vertices: too few vertices ({len(pts)}), need at least 2")
        try:
            return Polyline(tuple(pts), closed)
        except DomainError as exc:
            raise ParseError(f"vertices: {exc}") from None
    if kind == "hermite":
        vals = {}
        for key in ("A", "tA", "B", "tB"):
            if key not in doc:
                raise ParseError(f"{key}: missing")
            vals[key] = _point(doc[key], key)
        for key in ("tA", "tB"):
            if vals[key].length() < 1e-12:
                raise ParseError(f"{key}: zero tangent")
        if vals["A"] == vals["B"]:
            raise ParseError("A, B: endpoints coincide")
        return G1Pair(vals["A"], vals["tA"], vals["B"], vals["tB"])
    raise ParseError(f"unknown input kind {kind!r}")


def parse_input(path: str | Path, kind: str) -> Polyline | G1Pair:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    return parse_document(doc, kind)


# ---------------------------------------------------------------- arc json


def as_spline(obj: ArcSpline | Biarc) -> ArcSpline:
    if isinstance(obj, ArcSpline):
        return obj
    rec = EdgeRecord(0, "manual", "manual", obj.u, obj)
    return ArcSpline(tuple(obj.segments()), (rec,), False)


def _pt(v: Vec2, digits: int) -> list[float]:
    return [round_sig(v.x, digits), round_sig(v.y, digits)]


def arcjson_document(spline: ArcSpline | Biarc, precision: int | None = None) -> dict:
    spline = as_spline(spline)
    p = precision or DEFAULT_PRECISION
    segs = []
    for s in spline.segments:
        if s.is_arc:
            segs.append(
                {
                    "kind": "arc",
                    "start": _pt(s.start, p),
                    "end": _pt(s.end, p),
                    "center": _pt(s.center, p),
                    "radius": round_sig(s.radius, p),
                    "sweep": round_sig(s.sweep, p),
                }
            )
        else:
            segs.append({"kind": "line", "start": _pt(s.start, p), "end": _pt(s.end, p)})
    edges = [
        {
            "index": e.index,
            "requested": e.requested,
            "strategy": e.applied,
            "fell_back": e.fell_back,
            "u": round_sig(e.u, p),
        }
        for e in spline.edges
    ]
    return {
        "closed": spline.closed,
        "total_length": round_sig(spline.total_length, p),
        "segments": segs,
        "edges": edges,
    }


def emit_arcjson(spline: ArcSpline | Biarc, precision: int | None = None) -> str:
    return json.dumps(arcjson_document(spline, precision), indent=2) + "\n"


def load_arcjson(text: str) -> list[ArcSegment]:
    """Read the segment list back from an arc-JSON document."""
    doc = json.loads(text)
    out = []
    for i, s in enumerate(doc.get("segments", [])):
        start = _point(s.get("start"), f"segments[{i}].start")
        end = _point(s.get("end"), f"segments[{i}].end")
        if s.get("kind") == "arc":
            out.append(
                ArcSegment.arc(
                    start,
                    end,
                    _point(s.get("center"), f"segments[{i}].center"),
                    float(s["radius"]),
                    float(s["sweep"]),
                )
            )
        elif s.get("kind") == "line":
            out.append(ArcSegment.line(start, end))
        else:
            raise ParseError(f"segments[{i}].kind: expected 'arc' or 'line'")
    return out


# ---------------------------------------------------------------- svg / gcode


def _split_full_circles(segments) -> list[ArcSegment]:
    out = []
    for s in segments:
        if s.is_arc and abs(s.sweep) >= 2.0 * math.pi - 1e-12:
            half = 0.5 * s.sweep
            mid = s.center + rotate(s.start - s.center, half)
            out.append(ArcSegment.arc(s.start, mid, s.center, s.radius, half))
            out.append(ArcSegment.arc(mid, s.end, s.center, s.radius, half))
        else:
            out.append(s)
    return out


def _bounds(segments) -> tuple[float, float, float, float]:
    xs, ys = [], []
    for s in segments:
        pts = s.sample(64) if s.is_arc else [s.start, s.end]
        xs.extend(p.x for p in pts)
        ys.extend(p.y for p in pts)
    return min(xs), min(ys), max(xs), max(ys)


def emit_svg(spline: ArcSpline | Biarc, precision: int | None = None) -> str:
    """SVG with one path element.

    Geometry is written in y-up coordinates inside a ``scale(1,-1)`` group,
    so the sweep flag is 1 exactly for counterclockwise (positive) arcs.
    """
    spline = as_spline(spline)
    p = precision or DEFAULT_PRECISION
    segs = _split_full_circles(spline.segments)
    f = lambda x: fmt_sig(x, p)  # noqa: E731
    x0, y0, x1, y1 = _bounds(segs)
    size = max(x1 - x0, y1 - y0) or 1.0
    m = 0.05 * size
    view = (x0 - m, -(y1 + m), (x1 - x0) + 2 * m, (y1 - y0) + 2 * m)

    d = [f"M {f(segs[0].start.x)} {f(segs[0].start.y)}"]
    for s in segs:
        if s.is_arc:
            r = abs(s.radius)
            large = int(abs(s.sweep) > math.pi)
            sweep = int(s.sweep > 0)
            d.append(f"A {f(r)} {f(r)} 0 {large} {sweep} {f(s.end.x)} {f(s.end.y)}")
        else:
            d.append(f"L {f(s.end.x)} {f(s.end.y)}")
    if spline.closed:
        d.append("Z")
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        "<!-- y-up coordinates: the group below flips y; arc sweep-flag 1 = counterclockwise -->",
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="{}">'.format(" ".join(f(v) for v in view)),
        '  <g transform="scale(1,-1)">',
        '    <path d="{}" fill="none" stroke="black" stroke-width="{}"/>'.format(" ".join(d), f(0.005 * size)),
        "  </g>",
        "</svg>",
    ]
    return "\n".join(lines) + "\n"


def emit_gcode(spline: ArcSpline | Biarc, precision: int | None = None) -> str:
    """XY-plane program: G0 to the start, then G1 / G2 (cw) / G3 (ccw) moves
    with I, J measured from each segment's start point."""
    spline = as_spline(spline)
    p = precision or DEFAULT_PRECISION
    f = lambda x: fmt_fixed(x, p)  # noqa: E731
    segs = _split_full_circles(spline.segments)
    out = [f"G0 X{f(segs[0].start.x)} Y{f(segs[0].start.y)}"]
    for s in segs:
        if s.is_arc:
            code = "G3" if s.sweep > 0 else "G2"
            off = s.center - s.start
            out.append(f"{code} X{f(s.end.x)} Y{f(s.end.y)} I{f(off.x)} J{f(off.y)}")
        else:
            out.append(f"G1 X{f(s.end.x)} Y{f(s.end.y)}")
    return "\n".join(out) + "\n"


def parse_gcode(text: str) -> list[ArcSegment]:
    """Rebuild segments from a program written by :func:`emit_gcode`."""
    pos: Vec2 | None = None
    out: list[ArcSegment] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        words = line.split()
        if not words:
            continue
        code, vals = words[0], {w[0]: float(w[1:]) for w in words[1:]}
        target = Vec2(vals["X"], vals["Y"])
        if code == "G0":
            pos = target
            continue
        if pos is None:
            raise ParseError(f"line {lineno}: move before G0")
        if code == "G1":
            out.append(ArcSegment.line(pos, target))
        elif code in ("G2", "G3"):
            center = pos + Vec2(vals["I"], vals["J"])
            r0 = pos - center
            r1 = target - center
            ang = math.atan2(r0.x * r1.y - r0.y * r1.x, r0.x * r1.x + r0.y * r1.y)
            if code == "G3" and ang < 0:
                ang += 2.0 * math.pi
            elif code == "G2" and ang > 0:
                ang -= 2.0 * math.pi
            radius = r0.length() if code == "G3" else -r0.length()
            out.append(ArcSegment.arc(pos, target, center, radius, ang))
        else:
            raise ParseError(f"line {lineno}: unsupported word {code}")
        pos = target
    return out


# ---------------------------------------------------------------- report


def emit_report(spline: ArcSpline, precision: int | None = None) -> str:
    """Tab-delimited summary followed by one row per edge."""
    p = precision or DEFAULT_PRECISION
    f = lambda x: fmt_sig(x, p)  # noqa: E731
    rows = [
        "# summary",
        "edges\tsegments\tfallbacks\ttotal_length",
        f"{len(spline.edges)}\t{len(spline.segments)}\t{spline.fallback_count}\t{f(spline.total_length)}",
        "# edges",
        "edge\trequested\tapplied\tfell_back\tu\tpsi_deg\tR_A\tR_B",
    ]
    for e in spline.edges:
        b = e.biarc
        ra = f(b.segA.radius) if b.segA.is_arc else "line"
        rb = f(b.segB.radius) if b.segB.is_arc else "line"
        rows.append(
            f"{e.index}\t{e.requested}\t{e.applied}\t{int(e.fell_back)}\t{f(e.u)}"
            f"\t{f(math.degrees(b.frame.psi))}\t{ra}\t{rb}"
        )
    return "\n".join(rows) + "\n"
