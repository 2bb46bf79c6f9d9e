"""Random data generators and independent geometric oracles for the tests."""

from __future__ import annotations

import math
import random

from biarcs.biarc_core import G1Pair
from biarcs.symplectic2d import Vec2

WORKED_PAIR = dict(A=(0.0, 0.0), tA=(0.0, 1.0), B=(-200.0, 0.0), tB=(-1.0, 0.0))

# closed 13-vertex outline of a letter W; every inner corner is acute
W_OUTLINE = [
    (0, 10), (1.5, 10), (2.8, 2.5), (4.3, 8), (5.7, 8), (7.2, 2.5), (8.5, 10),
    (10, 10), (8, 0), (6.6, 0), (5, 6), (3.4, 0), (2, 0),
]


def worked_pair() -> G1Pair:
    return G1Pair(**WORKED_PAIR)


def unit(angle: float) -> Vec2:
    return Vec2(math.cos(angle), math.sin(angle))


def random_pair(rng: random.Random, min_half_sin: float = 0.05, max_half_cos: float = 1.0) -> G1Pair:
    """Random pair whose biarc angle keeps ``|sin(psi/2)| >= min_half_sin``."""
    while True:
        A = Vec2(rng.uniform(-10, 10), rng.uniform(-10, 10))
        c = rng.uniform(0.5, 10) * unit(rng.uniform(-math.pi, math.pi))
        ta = rng.uniform(-math.pi, math.pi)
        psi = rng.uniform(-math.pi, math.pi)
        if abs(math.sin(psi / 2)) < min_half_sin or abs(math.cos(psi / 2)) > max_half_cos:
            continue
        return G1Pair(A, unit(ta), A + c, unit(ta + psi))


def random_parallel_pair(rng: random.Random) -> G1Pair:
    A = Vec2(rng.uniform(-10, 10), rng.uniform(-10, 10))
    c = rng.uniform(0.5, 10) * unit(rng.uniform(-math.pi, math.pi))
    t = unit(rng.uniform(-math.pi, math.pi))
    return G1Pair(A, t, A + c, t)


def circle_tangent_at_end(t_start: Vec2, chord: Vec2) -> Vec2:
    """End tangent of the circular arc leaving with ``t_start`` along ``chord``:
    the start tangent mirrored across the chord line."""
    n2 = chord.x * chord.x + chord.y * chord.y
    d = t_start.x * chord.x + t_start.y * chord.y
    return Vec2(2 * d * chord.x / n2 - t_start.x, 2 * d * chord.y / n2 - t_start.y)


def bezier_midpoint(A: Vec2, A1: Vec2, B1: Vec2, B: Vec2) -> Vec2:
    """de Casteljau evaluation at t = 1/2."""
    mid = lambda p, q: Vec2(0.5 * (p.x + q.x), 0.5 * (p.y + q.y))  # noqa: E731
    p01, p12, p23 = mid(A, A1), mid(A1, B1), mid(B1, B)
    return mid(mid(p01, p12), mid(p12, p23))


def circumcenter(p: Vec2, q: Vec2, r: Vec2) -> Vec2:
    ax, ay, bx, by, cx, cy = p.x, p.y, q.x, q.y, r.x, r.y
    d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    ux = ((ax**2 + ay**2) * (by - cy) + (bx**2 + by**2) * (cy - ay) + (cx**2 + cy**2) * (ay - by)) / d
    uy = ((ax**2 + ay**2) * (cx - bx) + (bx**2 + by**2) * (ax - cx) + (cx**2 + cy**2) * (bx - ax)) / d
    return Vec2(ux, uy)


def polyline_length(seg, n: int = 10_000) -> float:
    """Dense chord sum of a segment, evaluated from its center/radius/sweep
    directly rather than through ArcSegment.point_at."""
    if seg.kind == "line":
        return math.hypot(seg.end.x - seg.start.x, seg.end.y - seg.start.y)
    cx, cy = seg.center.x, seg.center.y
    r = abs(seg.radius)
    th0 = math.atan2(seg.start.y - cy, seg.start.x - cx)
    total = 0.0
    px, py = seg.start.x, seg.start.y
    for i in range(1, n + 1):
        th = th0 + seg.sweep * i / n
        x, y = cx + r * math.cos(th), cy + r * math.sin(th)
        total += math.hypot(x - px, y - py)
        px, py = x, y
    return total


def chain_violations(spline, poly=None, tangents=None, tol: float = 1e-9) -> list[str]:
    """Check the G1-chain invariants; returns human readable violations."""
    out = []
    segs = spline.segments
    n = len(segs)
    pairs = list(zip(segs, segs[1:]))
    if spline.closed and n > 1:
        pairs.append((segs[-1], segs[0]))
    for k, (s, t) in enumerate(pairs):
        if s.end != t.start:
            out.append(f"junction {k}: endpoints differ {s.end} vs {t.start}")
        te, ts = s.tangent_at_end(), t.tangent_at_start()
        if (te - ts).length() > tol:
            out.append(f"junction {k}: tangent jump {(te - ts).length():.3g}")
    if poly is not None:
        # per edge, so a joint that happens to land on another vertex is not confused with it
        v = poly.vertices
        if len(spline.edges) != poly.edge_count():
            out.append(f"{len(spline.edges)} edges for {poly.edge_count()} polygon edges")
        for e in spline.edges:
            i, j = e.index, (e.index + 1) % len(v)
            own = e.biarc.segments()
            if own[0].start != v[i] or own[-1].end != v[j]:
                out.append(f"edge {i}: does not span vertices {i} and {j}")
            if tangents is not None:
                if (own[0].tangent_at_start() - tangents[i]).length() > tol:
                    out.append(f"vertex {i}: tangent not honored")
                if (own[-1].tangent_at_end() - tangents[j]).length() > tol:
                    out.append(f"vertex {j}: tangent not honored")
    if n > 2 * len(spline.edges):
        out.append("too many segments")
    return out
