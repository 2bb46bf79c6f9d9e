"""Plane vector algebra: scalar product, complex structure and skew product.

Every operation is a pure function on immutable ``Vec2`` values. Unit-length
normalization is never applied implicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True, slots=True)
class Vec2:
    """Immutable plane vector (or point)."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"non-finite vector component ({self.x}, {self.y})")

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Vec2:
        return Vec2(-self.x, -self.y)

    def __mul__(self, s: float) -> Vec2:
        return Vec2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> Vec2:
        return Vec2(self.x / s, self.y / s)

    def __iter__(self):
        yield self.x
        yield self.y

    def length(self) -> float:
        return math.hypot(self.x, self.y)

    def sqr(self) -> float:
        return self.x * self.x + self.y * self.y

    def as_list(self) -> list[float]:
        return [self.x, self.y]


ZERO = Vec2(0.0, 0.0)


def tilde(v: Vec2) -> Vec2:
    """Rotate ``v`` by +90 degrees: the skew-orthogonal partner ``(-y, x)``."""
    return Vec2(-v.y, v.x)


def dot(a: Vec2, b: Vec2) -> float:
    return a.x * b.x + a.y * b.y


def skew(a: Vec2, b: Vec2) -> float:
    """Signed parallelogram area ``dot(tilde(a), b)``."""
    return a.x * b.y - a.y * b.x


def rotate(v: Vec2, angle: float) -> Vec2:
    """Counterclockwise rotation, written as ``cos*v + sin*tilde(v)``."""
    c = math.cos(angle)
    s = math.sin(angle)
    return Vec2(c * v.x - s * v.y, c * v.y + s * v.x)


def reflect(v: Vec2, m: Vec2) -> Vec2:
    """Mirror ``v`` across the line spanned by ``m``.

    Raises:
        DomainError: if ``m`` is the zero vector.
    """
    m2 = m.sqr()
    if m2 == 0.0:
        raise DomainError("reflect: zero mirror vector")
    mt = tilde(m)
    return (dot(m, v) * m - dot(mt, v) * mt) / m2


def normalize(v: Vec2, min_length: float = 1e-12) -> Vec2:
    """Scale ``v`` to unit length, rejecting vectors shorter than ``min_length``."""
    n = v.length()
    if n < min_length:
        raise DomainError(f"cannot normalize near-zero vector ({v.x}, {v.y})")
    return Vec2(v.x / n, v.y / n)


def angle_between(a: Vec2, b: Vec2) -> float:
    """Directed angle from ``a`` to ``b`` in (-pi, pi]."""
    return math.atan2(skew(a, b), dot(a, b))
