"""Joint selection strategies.

Each strategy maps a G1 pair to a joint parameter ``u``. Strategies that
have no admissible solution raise :class:`NotApplicable`; :func:`select`
walks a fallback chain ending in the always-applicable equal-chord joint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .biarc_core import (
    DEFAULT_TOL,
    Biarc,
    G1Pair,
    JointFrame,
    Tolerances,
    build_biarc,
    classify,
    joint_frame,
    param_of_chord,
)
from .errors import BiarcError, ConstructionError, DomainError, NotApplicable
from .symplectic2d import Vec2, angle_between, dot, skew, tilde

EQUAL_CHORD = "equal_chord"
PARALLEL_TANGENT = "parallel_tangent"
J_SHAPED = "j_shaped"
CURVATURE_CONSTRAINED = "curvature_constrained"
CUBIC_MIDPOINT = "cubic_midpoint"

KINDS = (EQUAL_CHORD, PARALLEL_TANGENT, J_SHAPED, CURVATURE_CONSTRAINED, CUBIC_MIDPOINT)
# reported when even the equal-chord joint is degenerate and select moves it
SHIFTED_EQUAL_CHORD = "equal_chord_shifted"
_SHIFTS = (0.5, -0.5, 0.25, -0.25, 0.75, -0.75)

# joints this close to u = +-1 leave one half of the biarc vanishing
DEGENERATE_U = 1e-6
# slack on the |u| <= 1 smoothness window
_WINDOW_SLACK = 1e-12
# tangent mismatch that marks a kinked (vanished-half) biarc
_KINK = 1e-6


class InfeasibleRadius(DomainError):
    """The requested radius makes the companion radius infinite."""


class IndeterminateJointTangent(DomainError):
    """Both radii are equal, so the joint tangent cannot be resolved."""


@dataclass(frozen=True)
class StrategySpec:
    kind: str = EQUAL_CHORD
    given_radius: float | None = None
    side: str | None = None
    fallback: tuple[str, ...] = (EQUAL_CHORD,)

    def __post_init__(self) -> None:
        for k in (self.kind, *self.fallback):
            if k not in KINDS:
                raise ValueError(f"unknown strategy {k!r}")
        if self.kind == CURVATURE_CONSTRAINED:
            if self.given_radius is None or self.side not in ("start", "end"):
                raise ValueError("curvature_constrained needs given_radius and side 'start' or 'end'")
        elif self.given_radius is not None:
            raise ValueError(f"{self.kind} does not take a radius")
        if CURVATURE_CONSTRAINED in self.fallback and self.given_radius is None:
            raise ValueError("curvature_constrained in the fallback list needs a radius")
        object.__setattr__(self, "fallback", tuple(self.fallback))


@dataclass(frozen=True)
class StrategyResult:
    u: float
    requested: str
    applied: str
    biarc: Biarc
    diagnostics: tuple[str, ...] = field(default=())

    @property
    def fell_back(self) -> bool:
        return self.applied != self.requested


def equal_chord(frame: JointFrame) -> float:
    return 0.0


def _window_candidates(frame: JointFrame, phi: float) -> list[float]:
    """Map ``phi`` and its pi-shifted twin to ``u`` values inside the window."""
    twin = phi - math.copysign(math.pi, phi) if phi != 0.0 else math.pi
    out = []
    for p in (phi, twin):
        u = 2.0 * p / frame.psi
        if abs(u) <= 1.0 + _WINDOW_SLACK:
            out.append(max(-1.0, min(1.0, u)))
    return out


def _pick(pair: G1Pair, us: list[float], tol: Tolerances, accept=None) -> float:
    best = None
    best_len = -1.0
    for u in us:
        if abs(u) >= 1.0 - DEGENERATE_U:
            continue
        b = build_biarc(pair, u, tol)
        if accept is not None and not accept(b):
            continue
        shortest = min(b.segA.length(), b.segB.length())
        if shortest > best_len:
            best, best_len = u, shortest
    if best is None:
        raise NotApplicable("no admissible joint inside the smoothness window")
    return best


def parallel_tangent(frame: JointFrame, pair: G1Pair, tol: Tolerances = DEFAULT_TOL) -> float:
    """Joint whose tangent is parallel (or antiparallel) to the chord AB."""
    if frame.degenerate_line:
        raise NotApplicable("parallel tangent needs non-parallel end tangents")
    phi = angle_between(frame.tJ0, pair.c)
    return _pick(pair, _window_candidates(frame, phi), tol)


def j_shaped(frame: JointFrame, pair: G1Pair, tol: Tolerances = DEFAULT_TOL) -> float:
    """Joint that turns the starting or the ending arc into a line.

    The branch follows ``dot(c, tA)`` versus ``dot(c, tB)``; a tie gives the
    single-arc joint ``u = 0``.
    """
    if frame.degenerate_line:
        raise NotApplicable("J-shaped biarc needs non-parallel end tangents")
    c = pair.c
    diff = dot(c, pair.tA) - dot(c, pair.tB)
    if abs(diff) <= 1e-9 * c.length():
        return 0.0
    if diff > 0:
        target = pair.tA

        def accept(b: Biarc) -> bool:
            return b.segA.kind == "line" and dot(b.a, pair.tA) > 0
    else:
        target = pair.tB

        def accept(b: Biarc) -> bool:
            return b.segB.kind == "line" and dot(b.b, pair.tB) > 0

    phi = angle_between(frame.tJ0, target)
    return _pick(pair, _window_candidates(frame, phi), tol, accept)


class CurvatureResult(NamedTuple):
    R_A: float
    R_B: float
    tJ: Vec2
    u: float
    diagnostics: tuple[str, ...]


def companion_radius(pair: G1Pair, side: str, R_given: float) -> tuple[float, float]:
    """Return ``(R_A, R_B)`` when one of them is prescribed."""
    c = pair.c
    half_c2 = 0.5 * c.sqr()
    cos_psi_m1 = dot(pair.tA, pair.tB) - 1.0
    sA = skew(pair.tA, c)
    sB = skew(pair.tB, c)
    if side == "start":
        den = R_given * cos_psi_m1 - sB
        num = half_c2 - R_given * sA
        R_A = R_given
    elif side == "end":
        den = R_given * cos_psi_m1 + sA
        num = half_c2 + R_given * sB
        R_B = R_given
    else:
        raise ValueError(f"side must be 'start' or 'end', got {side!r}")
    scale = abs(R_given) + c.length()
    if abs(den) <= 1e-12 * scale:
        if abs(num) <= 1e-12 * scale * scale:
            raise IndeterminateJointTangent("both arcs lie on one circle: the companion radius is undetermined")
        raise InfeasibleRadius(f"radius {R_given} leaves the other arc with infinite radius")
    if side == "start":
        R_B = num / den
    else:
        R_A = num / den
    return R_A, R_B


def curvature_constrained(
    pair: G1Pair, side: str, R_given: float, tol: Tolerances = DEFAULT_TOL
) -> CurvatureResult:
    """Joint that gives one arc a prescribed signed radius."""
    if R_given == 0.0 or not math.isfinite(R_given):
        raise InfeasibleRadius("given radius must be finite and nonzero")
    R_A, R_B = companion_radius(pair, side, R_given)
    dR = R_A - R_B
    if abs(dR) <= 1e-9 * max(abs(R_A), abs(R_B)):
        raise IndeterminateJointTangent("equal radii: the biarc is a single circle")
    # loop closure A -> A0 -> J -> B0 -> B solved for the joint normal
    nJ = (R_A * tilde(pair.tA) - R_B * tilde(pair.tB) - pair.c) / dR
    norm = nJ.length()
    if abs(norm - 1.0) > 1e-6:
        raise ConstructionError(f"joint tangent has length {norm:.9g}, expected 1")
    tJ = -tilde(nJ) / norm

    frame = joint_frame(pair, tol)
    if frame.degenerate_line:
        a = R_A * (tilde(pair.tA) - nJ / norm)
        u = param_of_chord(frame, pair, a)
    else:
        phi = angle_between(frame.tJ0, tJ)
        u = 2.0 * phi / frame.psi

    b = build_biarc(pair, u, tol)
    got = b.segA.radius if side == "start" else b.segB.radius
    if got is None or abs(got - R_given) > 1e-9 * abs(R_given):
        raise ConstructionError(f"rebuilt biarc has radius {got}, requested {R_given}")
    diags = []
    if b.out_of_window:
        diags.append(
            f"joint u={u:.6g} lies outside [-1, 1]; the radius sign may be wrong"
        )
    return CurvatureResult(R_A, R_B, tJ, u, tuple(diags))


class CubicMidpointResult(NamedTuple):
    u: float
    a: Vec2
    h: float
    kappa: float
    t_BA: Vec2


def cubic_midpoint(frame: JointFrame, pair: G1Pair) -> CubicMidpointResult:
    """Joint at the midpoint of the cubic Bezier with control points
    ``A + h*tA`` and ``B - h*tB``, with ``h`` chosen so the midpoint lies on
    the joint circle."""
    if frame.degenerate_line:
        raise NotApplicable("cubic midpoint is singular for parallel end tangents")
    t_ba = pair.tA - pair.tB
    t2 = t_ba.sqr()
    if t2 < 1e-18:
        raise NotApplicable("cubic midpoint: tA and tB coincide")
    c = pair.c
    kappa = skew(t_ba, c) / t2
    # h^2 + p h - q = 0 with q > 0: exactly one positive root
    p = 8.0 * kappa * frame.cos_half / (3.0 * frame.sin_half)
    q = 4.0 * c.sqr() / (9.0 * frame.sin_half**2)
    disc = math.sqrt(p * p + 4.0 * q)
    h = 0.5 * (disc - p) if p <= 0 else 2.0 * q / (p + disc)
    if not h > 0:
        raise NotApplicable(f"cubic midpoint: non-positive control distance {h}")
    a = 0.5 * c + (0.375 * h) * t_ba
    u = param_of_chord(frame, pair, a)
    return CubicMidpointResult(u, a, h, kappa, t_ba)


def _strategy_u(kind: str, pair: G1Pair, frame: JointFrame, spec: StrategySpec, tol: Tolerances):
    diags: tuple[str, ...] = ()
    if kind == EQUAL_CHORD:
        u = equal_chord(frame)
    elif kind == PARALLEL_TANGENT:
        u = parallel_tangent(frame, pair, tol)
    elif kind == J_SHAPED:
        u = j_shaped(frame, pair, tol)
    elif kind == CUBIC_MIDPOINT:
        u = cubic_midpoint(frame, pair).u
    else:
        res = curvature_constrained(pair, spec.side, spec.given_radius, tol)
        u, diags = res.u, res.diagnostics
    return u, diags


def select(pair: G1Pair, spec: StrategySpec, tol: Tolerances = DEFAULT_TOL) -> StrategyResult:
    """Resolve the joint with ``spec.kind``, falling back along ``spec.fallback``.

    Equal chord ends every chain. If its joint is degenerate (an end tangent
    line meets the joint circle there), a nearby joint is used instead and
    reported as ``equal_chord_shifted``.
    """
    case = classify(pair, tol)
    if case.case_id == 6:
        b = build_biarc(pair, 0.0, tol)
        return StrategyResult(0.0, spec.kind, spec.kind, b, ("single line: no strategy consulted",))

    frame = joint_frame(pair, tol)
    chain = [spec.kind, *(k for k in spec.fallback if k != spec.kind)]
    if EQUAL_CHORD not in chain:
        chain.append(EQUAL_CHORD)
    diagnostics: list[str] = []
    for kind in chain:
        try:
            u, diags = _strategy_u(kind, pair, frame, spec, tol)
            if abs(u) > 1.0 + _WINDOW_SLACK:
                diagnostics.extend(diags)
                diagnostics.append(f"{kind}: joint u={u:.6g} outside the smoothness window")
                continue
            b = build_biarc(pair, u, tol)
        except (NotApplicable, BiarcError) as exc:
            diagnostics.append(f"{kind}: {exc}")
            continue
        diagnostics.extend(diags)
        if b.tangent_defect() > _KINK:
            diagnostics.append(f"{kind}: joint u={u:.6g} collapses one arc and leaves a kink")
            continue
        return StrategyResult(u, spec.kind, kind, b, tuple(diagnostics))
    # half-turn data can put the equal-chord joint on an end tangent line
    best = None
    for u in _SHIFTS:
        try:
            b = build_biarc(pair, u, tol)
        except BiarcError:
            continue
        if b.tangent_defect() > _KINK:
            continue
        shortest = min(b.segA.length(), b.segB.length())
        if best is None or shortest > best[0]:
            best = (shortest, b)
    if best is None:
        raise ConstructionError("no regular joint on the joint circle", case_id=case.case_id)
    b = best[1]
    diagnostics.append(f"equal chord joint is degenerate; shifted to u={b.u:.6g}")
    return StrategyResult(b.u, spec.kind, SHIFTED_EQUAL_CHORD, b, tuple(diagnostics))
