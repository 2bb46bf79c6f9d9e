"""Joint circle, case classification and the one-parameter biarc family.

A biarc interpolates two oriented points ``(A, tA)`` and ``(B, tB)``. All
admissible joints lie on the joint circle through ``A`` and ``B``; a joint is
addressed by ``u`` where ``u = 0`` is the equal-chord joint and ``u = -1`` /
``u = 1`` coincide with ``A`` / ``B``.

Angles are always recovered with ``atan2`` on (skew, dot) pairs so arc sweeps
keep their full signed range (-2*pi, 2*pi].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import ConstructionError, DomainError
from .symplectic2d import (
    Vec2,
    angle_between,
    dot,
    normalize,
    reflect,
    rotate,
    skew,
    tilde,
)

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Tolerances:
    """Numerical switches.

    ``eps_angle`` bounds ``|sin(psi/2)|`` below which the joint circle is
    treated as the line through A and B. ``eps_line`` bounds
    ``|skew(t, chord)| / |chord|`` below which an arc is emitted as a line.
    """

    eps_angle: float = 1e-9
    eps_line: float = 1e-9

    def __post_init__(self) -> None:
        if not (self.eps_angle > 0 and self.eps_line > 0):
            raise DomainError("tolerances must be positive")


DEFAULT_TOL = Tolerances()

# relative tie-break for the Table-1 style predicates
_CLASSIFY_TOL = 1e-9
# chords shorter than this fraction of |c| are zero-length segments
_ZERO_CHORD = 1e-12


def _vec(v) -> Vec2:
    return v if isinstance(v, Vec2) else Vec2(float(v[0]), float(v[1]))


@dataclass(frozen=True)
class G1Pair:
    """Two endpoints with unit tangents. Tangents are normalized on construction."""

    A: Vec2
    tA: Vec2
    B: Vec2
    tB: Vec2
    c: Vec2 = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "A", _vec(self.A))
        object.__setattr__(self, "B", _vec(self.B))
        object.__setattr__(self, "tA", normalize(_vec(self.tA)))
        object.__setattr__(self, "tB", normalize(_vec(self.tB)))
        object.__setattr__(self, "c", self.B - self.A)

    def require_chord(self) -> float:
        n = self.c.length()
        if n == 0.0:
            raise DomainError("zero chord: A and B coincide")
        return n


class BiarcAngle(NamedTuple):
    psi: float
    sin_half: float
    cos_half: float
    tan_half: float


def biarc_angle(tA: Vec2, tB: Vec2) -> BiarcAngle:
    """Directed angle psi from ``tA`` to ``tB`` in (-pi, pi] plus half-angle terms.

    ``tan_half`` is ``inf`` for exactly antiparallel tangents.
    """
    s = skew(tA, tB)
    d = dot(tA, tB)
    psi = math.atan2(s, d)
    if psi <= -math.pi:
        psi = math.pi
    half = 0.5 * psi
    sin_half = math.sin(half)
    cos_half = math.cos(half)
    tan_half = math.inf if 1.0 + d == 0.0 else sin_half / cos_half
    return BiarcAngle(psi, sin_half, cos_half, tan_half)


@dataclass(frozen=True)
class CaseLabel:
    case_id: int
    description: str


CASE_DESCRIPTIONS = {
    1: "tangents point inside the joint circle; start arc inner",
    2: "all tangents tangential to the joint circle; single arc",
    3: "tangents point outside the joint circle; start arc outer",
    4: "tangents point inside; tA collinear with chord",
    5: "parallel tangents, joint locus is the line AB",
    6: "parallel tangents collinear with chord; single line",
    7: "antiparallel tangents; chord is a diameter of the joint circle",
}


def classify(pair: G1Pair, tol: Tolerances = DEFAULT_TOL) -> CaseLabel:
    """Assign one of the seven geometric situations to ``pair``."""
    cn = pair.require_chord()
    ang = biarc_angle(pair.tA, pair.tB)
    collinear = abs(skew(pair.c, pair.tA)) <= _CLASSIFY_TOL * cn
    if abs(ang.sin_half) < tol.eps_angle:
        case = 6 if collinear else 5
    elif abs(ang.cos_half) < tol.eps_angle:
        case = 7
    else:
        diff = dot(pair.c, pair.tA) - dot(pair.c, pair.tB)
        if abs(diff) <= _CLASSIFY_TOL * cn:
            case = 2
        elif diff < 0:
            case = 3
        else:
            case = 4 if collinear else 1
    return CaseLabel(case, CASE_DESCRIPTIONS[case])


@dataclass(frozen=True)
class JointFrame:
    """Precomputed joint-circle data for one G1 pair.

    ``R`` and ``rAI`` are only defined when the circle has not degenerated to
    a line; reading them otherwise raises ``DomainError``.
    """

    psi: float
    sin_half: float
    cos_half: float
    tan_half: float
    c: Vec2
    rAJ0: Vec2
    tJ0: Vec2
    tAstar: Vec2
    degenerate_line: bool
    _R: float | None = None
    _rAI: Vec2 | None = None

    @property
    def R(self) -> float:
        if self._R is None:
            raise DomainError("joint circle radius undefined: circle degenerated to a line")
        return self._R

    @property
    def rAI(self) -> Vec2:
        if self._rAI is None:
            raise DomainError("joint circle center undefined: circle degenerated to a line")
        return self._rAI


def joint_frame(pair: G1Pair, tol: Tolerances = DEFAULT_TOL) -> JointFrame:
    pair.require_chord()
    c = pair.c
    ang = biarc_angle(pair.tA, pair.tB)
    t_star = reflect(pair.tA, c)
    if abs(ang.sin_half) < tol.eps_angle:
        return JointFrame(
            psi=ang.psi,
            sin_half=ang.sin_half,
            cos_half=ang.cos_half,
            tan_half=ang.tan_half,
            c=c,
            rAJ0=0.5 * c,
            tJ0=t_star,
            tAstar=t_star,
            degenerate_line=True,
        )
    s, co = ang.sin_half, ang.cos_half
    ct = tilde(c)
    R = c.length() / (2.0 * s)
    rAI = 0.5 * c + (co / (2.0 * s)) * ct
    # tan(psi/4) written without the 1 - cos cancellation
    tan_quarter = s / (1.0 + co)
    rAJ0 = 0.5 * (c - tan_quarter * ct)
    tJ0 = rotate(t_star, -0.5 * ang.psi)
    return JointFrame(
        psi=ang.psi,
        sin_half=s,
        cos_half=co,
        tan_half=ang.tan_half,
        c=c,
        rAJ0=rAJ0,
        tJ0=tJ0,
        tAstar=t_star,
        degenerate_line=False,
        _R=R,
        _rAI=rAI,
    )


def chord_at(frame: JointFrame, pair: G1Pair, u: float) -> Vec2:
    """Chord vector from A to the joint addressed by ``u``."""
    c = pair.c
    if frame.degenerate_line:
        return (0.5 * (1.0 + u)) * c
    if u == -1.0:
        return Vec2(0.0, 0.0)
    if u == 1.0:
        return c
    # sum-to-product form of the (sin + sin, cos - cos) numerator; avoids
    # cancellation when psi is small
    q = 0.25 * frame.psi
    k = math.sin((1.0 + u) * q) / frame.sin_half
    p = (1.0 - u) * q
    return k * (math.cos(p) * c - math.sin(p) * tilde(c))


def param_of_chord(
    frame: JointFrame, pair: G1Pair, a: Vec2, rel_tol: float = 1e-7
) -> float:
    """Inverse of :func:`chord_at`.

    Raises:
        DomainError: if ``A + a`` is not on the joint circle (or line).
    """
    c = pair.c
    c2 = c.sqr()
    if frame.degenerate_line:
        if abs(skew(c, a)) > rel_tol * c2:
            raise DomainError("point is not on the line AB")
        return 2.0 * dot(a, c) / c2 - 1.0
    R = abs(frame.R)
    dev = abs((a - frame.rAI).length() - R)
    if dev > rel_tol * R:
        raise DomainError(f"point is off the joint circle by {dev:.3g}")
    s = frame.sin_half
    phi = math.atan2(s * (2.0 * dot(a, c) - c2), 2.0 * s * skew(a, c) + frame.cos_half * c2)
    return 2.0 * phi / frame.psi


def joint_tangent_at(frame: JointFrame, u: float) -> Vec2:
    if frame.degenerate_line:
        return frame.tAstar
    return rotate(frame.tJ0, 0.5 * u * frame.psi)


class ChordArc(NamedTuple):
    """Arc (or line) determined by a chord and the tangent at one of its ends.

    ``radius`` and ``center_offset`` are ``None`` for a line. The offset is
    measured from the end that carries the tangent.
    """

    angle: float
    radius: float | None
    center_offset: Vec2 | None

    @property
    def is_line(self) -> bool:
        return self.radius is None


def arc_from_chord(
    chord: Vec2, tangent: Vec2, at_start: bool, tol: Tolerances = DEFAULT_TOL
) -> ChordArc:
    """Signed sweep, signed radius and center offset of the arc along ``chord``.

    With ``at_start`` the tangent is the arc's start tangent, otherwise its
    end tangent.
    """
    n2 = chord.sqr()
    if n2 == 0.0:
        raise DomainError("arc_from_chord: zero chord")
    if at_start:
        s = skew(tangent, chord)
        angle = 2.0 * math.atan2(s, dot(tangent, chord))
    else:
        s = skew(chord, tangent)
        angle = 2.0 * math.atan2(s, dot(chord, tangent))
    if abs(s) < tol.eps_line * math.sqrt(n2):
        return ChordArc(angle, None, None)
    radius = n2 / (2.0 * s)
    return ChordArc(angle, radius, radius * tilde(tangent))


@dataclass(frozen=True)
class ArcSegment:
    """Directed circular arc or line segment.

    Radius and sweep are signed, positive for counterclockwise travel.
    """

    kind: str
    start: Vec2
    end: Vec2
    center: Vec2 | None = None
    radius: float | None = None
    sweep: float | None = None

    @classmethod
    def line(cls, start: Vec2, end: Vec2) -> ArcSegment:
        return cls("line", start, end)

    @classmethod
    def arc(cls, start: Vec2, end: Vec2, center: Vec2, radius: float, sweep: float) -> ArcSegment:
        return cls("arc", start, end, center, radius, sweep)

    @property
    def is_arc(self) -> bool:
        return self.kind == "arc"

    def length(self) -> float:
        if self.is_arc:
            return abs(self.radius * self.sweep)
        return (self.end - self.start).length()

    def tangent_at_start(self) -> Vec2 | None:
        if self.is_arc:
            return tilde(self.start - self.center) / self.radius
        d = self.end - self.start
        return None if d.sqr() == 0.0 else normalize(d, 0.0)

    def tangent_at_end(self) -> Vec2 | None:
        if self.is_arc:
            return tilde(self.end - self.center) / self.radius
        return self.tangent_at_start()

    def point_at(self, s: float) -> Vec2:
        """Point at normalized arc-length parameter ``s`` in [0, 1]."""
        if self.is_arc:
            return self.center + rotate(self.start - self.center, s * self.sweep)
        return self.start + s * (self.end - self.start)

    def sample(self, n: int) -> list[Vec2]:
        if n < 1:
            raise ValueError("need at least one interval")
        pts = [self.point_at(i / n) for i in range(n)]
        pts.append(self.end)
        return pts


@dataclass(frozen=True)
class Biarc:
    pair: G1Pair
    frame: JointFrame
    case: CaseLabel
    segA: ArcSegment
    segB: ArcSegment
    joint: Vec2
    tJ: Vec2
    u: float
    alpha: float
    beta: float
    a: Vec2
    b: Vec2

    @property
    def out_of_window(self) -> bool:
        """Joint lies on the far side of the joint circle."""
        return abs(self.u) > 1.0

    @property
    def degenerate_joint(self) -> bool:
        return self.segA.length() == 0.0 or self.segB.length() == 0.0

    def tangent_defect(self) -> float:
        """Largest tangent mismatch along the emitted segments, including the
        end tangents of the pair. Nonzero only when a vanished half leaves a kink."""
        segs = self.segments()
        gaps = [
            (segs[0].tangent_at_start() - self.pair.tA).length(),
            (segs[-1].tangent_at_end() - self.pair.tB).length(),
        ]
        gaps += [(s.tangent_at_end() - t.tangent_at_start()).length() for s, t in zip(segs, segs[1:])]
        return max(gaps)

    def segments(self) -> list[ArcSegment]:
        """Segment list with zero-length halves dropped and co-circular or
        collinear halves merged into one."""
        cn = self.pair.require_chord()
        segs = [s for s in (self.segA, self.segB) if s.length() > _ZERO_CHORD * cn]
        if len(segs) == 2:
            merged = _merge(segs[0], segs[1], cn)
            if merged is not None:
                return [merged]
        return segs


def _merge(s1: ArcSegment, s2: ArcSegment, scale: float) -> ArcSegment | None:
    tol = 1e-9
    if not s1.is_arc and not s2.is_arc:
        d1 = s1.end - s1.start
        d2 = s2.end - s2.start
        if abs(skew(d1, d2)) <= tol * d1.length() * d2.length() and dot(d1, d2) > 0:
            return ArcSegment.line(s1.start, s2.end)
        return None
    if s1.is_arc and s2.is_arc:
        r = max(abs(s1.radius), abs(s2.radius))
        if (
            abs(s1.radius - s2.radius) <= tol * r
            and (s1.center - s2.center).length() <= tol * max(r, scale)
        ):
            sweep = s1.sweep + s2.sweep
            if abs(sweep) <= TWO_PI + tol:
                return ArcSegment.arc(s1.start, s2.end, s1.center, s1.radius, sweep)
    return None


def wrap_angle(x: float) -> float:
    """Map an angle to (-pi, pi]."""
    y = math.remainder(x, TWO_PI)
    return math.pi if y == -math.pi else y


def build_biarc(pair: G1Pair, u: float, tol: Tolerances = DEFAULT_TOL) -> Biarc:
    """Assemble the biarc whose joint is addressed by ``u``.

    Raises:
        ConstructionError: on any inconsistency, tagged with the case id.
    """
    pair.require_chord()
    case = classify(pair, tol)
    try:
        frame = joint_frame(pair, tol)
        if case.case_id == 6:
            if dot(pair.c, pair.tA) < 0:
                raise ConstructionError(
                    "tangents oppose the chord: no biarc reverses along a line",
                    case_id=6,
                )
            return _single_line(pair, frame, case, u)
        return _assemble(pair, frame, case, u, tol)
    except ConstructionError:
        raise
    except (DomainError, ArithmeticError) as exc:
        raise ConstructionError(str(exc), case_id=case.case_id) from exc


def _single_line(pair: G1Pair, frame: JointFrame, case: CaseLabel, u: float) -> Biarc:
    a = (0.5 * (1.0 + u)) * pair.c
    J = pair.A + a
    return Biarc(
        pair=pair,
        frame=frame,
        case=case,
        segA=ArcSegment.line(pair.A, J),
        segB=ArcSegment.line(J, pair.B),
        joint=J,
        tJ=pair.tA,
        u=u,
        alpha=0.0,
        beta=0.0,
        a=a,
        b=pair.B - J,
    )


def _assemble(pair: G1Pair, frame: JointFrame, case: CaseLabel, u: float, tol: Tolerances) -> Biarc:
    cn = pair.c.length()
    a = chord_at(frame, pair, u)
    J = pair.A + a
    b = pair.B - J
    tJ = joint_tangent_at(frame, u)

    if not frame.degenerate_line:
        R = abs(frame.R)
        dev = abs((a - frame.rAI).length() - R)
        if dev > 1e-7 * R:
            raise ConstructionError(f"joint off the joint circle by {dev:.3g}", case_id=case.case_id)

    if a.length() <= _ZERO_CHORD * cn:
        segA = ArcSegment.line(pair.A, J)
        alpha = angle_between(pair.tA, tJ)
    else:
        arcA = arc_from_chord(a, pair.tA, True, tol)
        alpha = arcA.angle
        if arcA.is_line and dot(a, pair.tA) < 0:
            raise ConstructionError(
                f"joint u={u:.6g} makes the first half a line against its tangent",
                case_id=case.case_id,
            )
        if arcA.is_line:
            segA = ArcSegment.line(pair.A, J)
        else:
            segA = ArcSegment.arc(pair.A, J, pair.A + arcA.center_offset, arcA.radius, alpha)

    if b.length() <= _ZERO_CHORD * cn:
        segB = ArcSegment.line(J, pair.B)
        beta = angle_between(tJ, pair.tB)
    else:
        arcB = arc_from_chord(b, pair.tB, False, tol)
        beta = arcB.angle
        if arcB.is_line and dot(b, pair.tB) < 0:
            raise ConstructionError(
                f"joint u={u:.6g} makes the second half a line against its tangent",
                case_id=case.case_id,
            )
        if arcB.is_line:
            segB = ArcSegment.line(J, pair.B)
        else:
            segB = ArcSegment.arc(J, pair.B, pair.B + arcB.center_offset, arcB.radius, beta)

    mismatch = wrap_angle(alpha + beta - frame.psi)
    # the straight joint locus is only exact for psi = 0; it is off by O(psi)
    slack = 1e-9 + (abs(frame.psi) if frame.degenerate_line else 0.0)
    if abs(mismatch) > slack:
        raise ConstructionError(
            f"arc angles inconsistent: alpha + beta - psi = {mismatch:.3g} (mod 2pi)",
            case_id=case.case_id,
        )
    return Biarc(
        pair=pair,
        frame=frame,
        case=case,
        segA=segA,
        segB=segB,
        joint=J,
        tJ=tJ,
        u=u,
        alpha=alpha,
        beta=beta,
        a=a,
        b=b,
    )
