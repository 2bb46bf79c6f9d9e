import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from biarcs.errors import DomainError
from biarcs.symplectic2d import Vec2, dot, normalize, reflect, rotate, skew, tilde

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)
vectors = st.builds(Vec2, finite, finite)
angles = st.floats(min_value=-10, max_value=10)


def close(a: Vec2, b: Vec2, tol: float = 1e-12) -> bool:
    scale = max(1.0, a.length(), b.length())
    return (a - b).length() <= tol * scale


def test_tilde():
    assert tilde(Vec2(1, 0)) == Vec2(0, 1)
    assert tilde(Vec2(0, 1)) == Vec2(-1, 0)
    assert tilde(tilde(Vec2(3, 4))) == Vec2(-3, -4)


def test_dot():
    assert dot(Vec2(0, 1), Vec2(-1, 0)) == 0
    assert dot(Vec2(3, 4), Vec2(3, 4)) == 25
    assert dot(Vec2(1, 0), Vec2(0, 1)) == 0


def test_skew():
    assert skew(Vec2(1, 0), Vec2(0, 1)) == 1
    assert skew(Vec2(0, 1), Vec2(-1, 0)) == 1
    assert skew(Vec2(2, 1), Vec2(1, 3)) == 5
    assert skew(Vec2(1, 3), Vec2(2, 1)) == -5


def test_rotate():
    assert close(rotate(Vec2(1, 0), math.pi / 2), Vec2(0, 1))
    v = Vec2(0.3, -2.0)
    assert rotate(v, 0.0) == v
    h = math.sqrt(2) / 2
    assert close(rotate(Vec2(0, -1), -math.pi / 4), Vec2(-h, -h))


def test_reflect():
    assert close(reflect(Vec2(0, 1), Vec2(1, 0)), Vec2(0, -1))
    assert close(reflect(Vec2(0, 1), Vec2(-200, 0)), Vec2(0, -1))
    assert close(reflect(Vec2(3, 4), Vec2(3, 4)), Vec2(3, 4))
    with pytest.raises(DomainError):
        reflect(Vec2(1, 2), Vec2(0, 0))


def test_vec_rejects_non_finite():
    with pytest.raises(DomainError):
        Vec2(math.nan, 0.0)
    with pytest.raises(DomainError):
        Vec2(1.0, math.inf)


def test_normalize_rejects_tiny():
    with pytest.raises(DomainError):
        normalize(Vec2(1e-13, 0.0))
    assert normalize(Vec2(3, 4)) == Vec2(0.6, 0.8)


@given(vectors)
def test_tilde_is_skew_orthogonal(v):
    assert abs(dot(tilde(v), v)) <= 1e-12 * max(1.0, v.sqr())
    assert tilde(v).length() == pytest.approx(v.length(), rel=1e-15)


@given(vectors, vectors)
def test_skew_antisymmetric(a, b):
    assert skew(a, b) == -skew(b, a)
    assert skew(a, b) == pytest.approx(dot(tilde(a), b), rel=1e-12, abs=1e-9)


@given(vectors, angles)
def test_rotation_preserves_length_and_inverts(v, th):
    r = rotate(v, th)
    assert r.length() == pytest.approx(v.length(), rel=1e-12, abs=1e-12)
    assert close(rotate(r, -th), v)


@given(vectors, vectors)
def test_reflect_involution(v, m):
    if m.length() < 1e-6:
        return
    r = reflect(v, m)
    assert r.length() == pytest.approx(v.length(), rel=1e-12, abs=1e-12)
    assert close(reflect(r, m), v)
