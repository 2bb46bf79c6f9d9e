"""Polyline smoothing into G1 arc splines, one biarc per edge."""

from __future__ import annotations

from dataclasses import dataclass, field

from .biarc_core import DEFAULT_TOL, ArcSegment, Biarc, G1Pair, Tolerances, _vec
from .errors import BiarcError, ConstructionError, DomainError
from .joint_strategies import StrategySpec, select
from .symplectic2d import Vec2, normalize


@dataclass(frozen=True)
class Polyline:
    vertices: tuple[Vec2, ...]
    closed: bool = False

    def __post_init__(self) -> None:
        verts = tuple(_vec(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 2:
            raise DomainError("a polyline needs at least two vertices")
        xs = [v.x for v in verts]
        ys = [v.y for v in verts]
        diag = Vec2(max(xs) - min(xs), max(ys) - min(ys)).length()
        n = len(verts)
        last = n if self.closed else n - 1
        for i in range(last):
            j = (i + 1) % n
            if (verts[j] - verts[i]).length() <= 1e-12 * diag:
                raise DomainError(f"vertices {i} and {j} coincide")

    def __len__(self) -> int:
        return len(self.vertices)

    def edge_count(self) -> int:
        n = len(self.vertices)
        return n if self.closed else n - 1


def assign_tangents(poly: Polyline) -> list[Vec2]:
    """Catmull-Rom direction rule: each tangent is parallel to the line from
    the predecessor to the successor vertex. Open ends use their single edge."""
    v = poly.vertices
    n = len(v)
    out = []
    for i in range(n):
        if poly.closed:
            prev, nxt = v[i - 1], v[(i + 1) % n]
        else:
            prev = v[max(i - 1, 0)]
            nxt = v[min(i + 1, n - 1)]
        try:
            out.append(normalize(nxt - prev))
        except DomainError:
            raise DomainError(f"vertex {i}: predecessor and successor coincide") from None
    return out


@dataclass(frozen=True)
class EdgeRecord:
    index: int
    requested: str
    applied: str
    u: float
    biarc: Biarc
    diagnostics: tuple[str, ...] = ()

    @property
    def fell_back(self) -> bool:
        return self.applied != self.requested


@dataclass(frozen=True)
class ArcSpline:
    segments: tuple[ArcSegment, ...]
    edges: tuple[EdgeRecord, ...]
    closed: bool = False
    total_length: float = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "total_length", spline_length(self))

    @property
    def fallback_count(self) -> int:
        return sum(e.fell_back for e in self.edges)


def spline_length(spline: ArcSpline) -> float:
    return sum(s.length() for s in spline.segments)


def fit_pairs(
    pairs: list[G1Pair],
    spec: StrategySpec,
    closed: bool = False,
    tol: Tolerances = DEFAULT_TOL,
) -> ArcSpline:
    segments: list[ArcSegment] = []
    edges: list[EdgeRecord] = []
    for i, pair in enumerate(pairs):
        try:
            res = select(pair, spec, tol)
        except BiarcError as exc:
            raise ConstructionError(str(exc), edge=i) from exc
        edges.append(EdgeRecord(i, res.requested, res.applied, res.u, res.biarc, res.diagnostics))
        segments.extend(res.biarc.segments())
    return ArcSpline(tuple(segments), tuple(edges), closed)


def fit_spline(
    poly: Polyline,
    tangents: list[Vec2] | None = None,
    spec: StrategySpec | None = None,
    tol: Tolerances = DEFAULT_TOL,
) -> ArcSpline:
    """Fit one biarc per polyline edge (wrapping around when closed).

    Adjacent biarcs share the vertex tangent, so the chain is G1 by
    construction. Strategy fallbacks are recorded per edge.
    """
    if tangents is None:
        tangents = assign_tangents(poly)
    if len(tangents) != len(poly):
        raise DomainError(f"{len(tangents)} tangents for {len(poly)} vertices")
    spec = spec or StrategySpec()
    v = poly.vertices
    n = len(v)
    pairs = [
        G1Pair(v[i], tangents[i], v[(i + 1) % n], tangents[(i + 1) % n])
        for i in range(poly.edge_count())
    ]
    return fit_pairs(pairs, spec, poly.closed, tol)
