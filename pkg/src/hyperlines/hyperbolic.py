"""Hyperboloid model of H^{n+1}: geodesics, transport, Jacobi fields, endpoints.

Points are ``(n+2,)`` arrays with <p, p> = -1 and p0 > 0. Tangent vectors at
p are ``(n+2,)`` arrays Lorentz-orthogonal to p. Ideal points are unit
``(n+1,)`` arrays, the spatial coordinates of e0^perp.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import T_MAX, TOL_POINT
from .errors import DimensionError, DomainError, NumericError, RangeError
from .minkowski import basis, inner


def _tol(*arrays) -> float:
    s = max(1.0, *(float(np.max(np.abs(a))) for a in arrays))
    return TOL_POINT * s * s


def check_point(p) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.ndim != 1 or p.shape[0] < 3:
        raise DimensionError(f"point must be a vector of length >= 3, got {p.shape}")
    if abs(inner(p, p) + 1.0) > _tol(p) or p[0] <= 0:
        raise DomainError("point is not on the upper sheet of the hyperboloid")
    return p


def check_tangent(p, w) -> np.ndarray:
    w = np.asarray(w, dtype=float)
    if w.shape != np.shape(p):
        raise DimensionError(f"tangent shape {w.shape} does not match point {np.shape(p)}")
    if abs(inner(p, w)) > _tol(p, w):
        raise DomainError("vector is not tangent to the hyperboloid at the base")
    return w


# beyond this height <x, x> loses all digits to cancellation, so projections
# back onto the hyperboloid would add error instead of removing it
_WELL_CONDITIONED = 1e4


def normalize_point(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if abs(x[0]) > _WELL_CONDITIONED:
        return x
    return x / np.sqrt(-inner(x, x))


def project_tangent(p, w) -> np.ndarray:
    """Lorentz-orthogonal projection of an ambient vector onto T_pH."""
    return w + inner(w, p) * p


def origin(n: int) -> np.ndarray:
    return basis(n + 2, 0)


@dataclass(frozen=True)
class UnitTangent:
    """A point of the unit tangent bundle: base point ``p`` and unit direction ``v``."""

    p: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        p = check_point(self.p)
        v = check_tangent(p, self.v)
        if abs(inner(v, v) - 1.0) > _tol(p, v):
            raise DomainError("direction is not a unit vector")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "v", v)

    @property
    def n(self) -> int:
        return self.p.shape[0] - 2

    @classmethod
    def renormalized(cls, p, v) -> "UnitTangent":
        """Project (p, v) back onto the unit tangent bundle, then validate.

        Far out (p0 > 1e4) the inputs are kept as computed: they are accurate
        to relative rounding, which no projection can improve on.
        """
        p = normalize_point(p)
        v = np.asarray(v, dtype=float)
        if p[0] <= _WELL_CONDITIONED:
            v = project_tangent(p, v)
            v = v / np.sqrt(inner(v, v))
        return cls(p, v)


def base_unit_tangent(n: int) -> UnitTangent:
    """(e0, e1), the initial data of the base geodesic."""
    return UnitTangent(basis(n + 2, 0), basis(n + 2, 1))


def _guard(t: float):
    if abs(t) > T_MAX:
        raise RangeError(f"|t| = {abs(t):.3g} exceeds the guard {T_MAX}")


def geodesic_point(t0: UnitTangent, t: float) -> UnitTangent:
    _guard(t)
    c, s = np.cosh(t), np.sinh(t)
    return UnitTangent.renormalized(c * t0.p + s * t0.v, s * t0.p + c * t0.v)


def exp_map(p, w) -> np.ndarray:
    p = check_point(p)
    w = check_tangent(p, w)
    r = np.sqrt(max(inner(w, w), 0.0))
    if r == 0:
        return p.copy()
    _guard(r)
    return normalize_point(np.cosh(r) * p + np.sinh(r) * w / r)


def distance(p, q) -> float:
    # chord form: <p - q, p - q> = 4 sinh^2(d / 2); stable for nearby points
    d = np.asarray(p, dtype=float) - np.asarray(q, dtype=float)
    return float(2.0 * np.arcsinh(np.sqrt(max(inner(d, d), 0.0)) / 2.0))


def log_map(p, q) -> np.ndarray:
    """Tangent vector at p whose exponential is q."""
    p = check_point(p)
    q = check_point(q)
    d = distance(p, q)
    u = project_tangent(p, q)
    nu = np.sqrt(max(inner(u, u), 0.0))
    if d == 0 or nu == 0:
        return np.zeros_like(p)
    return d * u / nu


def parallel_transport(t0: UnitTangent, t: float, w) -> np.ndarray:
    """Transport w from t0.p along the geodesic of t0 for time t.

    The component along t0.v follows the velocity; the part orthogonal to
    the (p, v) plane is constant.
    """
    w = check_tangent(t0.p, w)
    _guard(t)
    a = inner(w, t0.v)
    perp = w - a * t0.v
    gt = geodesic_point(t0, t)
    out = a * gt.v + perp
    return project_tangent(gt.p, out)


def jacobi_eval(t0: UnitTangent, J0, J1, t: float) -> tuple[np.ndarray, np.ndarray]:
    """(J(t), J'(t)) of the orthogonal Jacobi field with J(0)=J0, J'(0)=J1.

    Curvature -1 gives J'' = J in a parallel frame.
    """
    for J in (J0, J1):
        check_tangent(t0.p, J)
        if abs(inner(J, t0.v)) > _tol(t0.p, J):
            raise DomainError("Jacobi data must be orthogonal to the geodesic")
    A = parallel_transport(t0, t, J0)
    B = parallel_transport(t0, t, J1)
    c, s = np.cosh(t), np.sinh(t)
    return c * A + s * B, s * A + c * B


def ideal_endpoints(t0: UnitTangent) -> tuple[np.ndarray, np.ndarray]:
    """(gamma(-inf), gamma(+inf)) as unit vectors of R^{n+1}."""
    p, v = t0.p, t0.v
    dm = p[0] - v[0]
    dp = p[0] + v[0]
    # positive on the unit tangent bundle, lost to cancellation once p0 ~ 1e15
    if not (dm > 1e-14 * p[0] and dp > 1e-14 * p[0]):
        raise NumericError("endpoint lost to cancellation far from the origin")
    minus = (p - v)[1:] / dm
    plus = (p + v)[1:] / dp
    return minus / np.linalg.norm(minus), plus / np.linalg.norm(plus)


def central_difference(samples, i: int, h: float) -> np.ndarray:
    """Derivative of a uniformly sampled array at interior index i.

    Fourth order throughout: the centred five-point stencil, shifted by one
    next to the ends. Needs at least five samples.
    """
    f = np.asarray(samples, dtype=float)
    last = f.shape[0] - 1
    if not 0 < i < last:
        raise IndexError(f"index {i} is not interior to 0..{last}")
    if last < 4:
        raise IndexError("need at least five samples")
    if i == 1:
        return (-3 * f[0] - 10 * f[1] + 18 * f[2] - 6 * f[3] + f[4]) / (12 * h)
    if i == last - 1:
        return (3 * f[last] + 10 * f[i] - 18 * f[i - 1] + 6 * f[i - 2] - f[i - 3]) / (12 * h)
    return (f[i - 2] - 8 * f[i - 1] + 8 * f[i + 1] - f[i + 2]) / (12 * h)


def covariant_derivative(beta, W, i: int, h: float) -> np.ndarray:
    """D/dt of the sampled field W along the sampled curve beta at index i."""
    beta = np.asarray(beta, dtype=float)
    W = np.asarray(W, dtype=float)
    if beta.shape != W.shape:
        raise DimensionError("curve and field sample arrays differ in shape")
    dW = central_difference(W, i, h)
    p = beta[i]
    return dW + inner(dW, p) * p
