"""Curves in the geodesic space: standard presentations and causal type.

A curve enters as a uniformly sampled lift to the unit tangent bundle. The
standard presentation slides each geodesic's parameter by f(t) so that the
base curve beta(t) = phi(0, t) meets every geodesic orthogonally; then
(beta', D/dt alpha_t'(0)) is the Jacobi data of the curve's velocity.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicSpline

from .boundary import BoundaryTangent, project_sphere
from .config import NULL_BAND
from .errors import DimensionError, DomainError
from .hyperbolic import (
    UnitTangent,
    central_difference,
    check_point,
    covariant_derivative,
    distance,
    normalize_point,
    project_tangent,
)
from .linespace import (
    CausalType,
    GTangent,
    MetricChoice,
    OrientedGeodesic,
    base_tangent,
    causal_from_norm,
    from_unit_tangent,
    norm,
)
from .minkowski import inner


@dataclass(frozen=True)
class CurveInG:
    """Lift v(t_i) = (P[i], V[i]) of a curve on the grid t_i = t0 + i h."""

    h: float
    P: np.ndarray
    V: np.ndarray
    t0: float = 0.0

    def __post_init__(self):
        P = np.asarray(self.P, dtype=float)
        V = np.asarray(self.V, dtype=float)
        if P.ndim != 2 or P.shape != V.shape:
            raise DimensionError("lift arrays must both have shape (N+1, n+2)")
        if P.shape[0] < 5:
            raise DomainError("a curve needs at least 5 samples")
        if not self.h > 0:
            raise DomainError("grid step must be positive")
        for p, v in zip(P, V):
            UnitTangent(p, v)
        object.__setattr__(self, "P", P)
        object.__setattr__(self, "V", V)

    @property
    def n(self) -> int:
        return self.P.shape[1] - 2

    @property
    def size(self) -> int:
        return self.P.shape[0]

    @property
    def times(self) -> np.ndarray:
        return self.t0 + self.h * np.arange(self.size)

    def lift(self, i: int) -> UnitTangent:
        return UnitTangent(self.P[i], self.V[i])

    def geodesics(self) -> list[OrientedGeodesic]:
        return [from_unit_tangent(self.lift(i)) for i in range(self.size)]

    @classmethod
    def from_lifts(cls, h: float, lifts, t0: float = 0.0) -> "CurveInG":
        lifts = list(lifts)
        return cls(h, np.array([u.p for u in lifts]), np.array([u.v for u in lifts]), t0)

    @classmethod
    def from_pairs(cls, h: float, pairs, t0: float = 0.0) -> "CurveInG":
        """Lift boundary-pair samples through the canonical base tangent."""
        return cls.from_lifts(h, (base_tangent(g) for g in pairs), t0)


@dataclass(frozen=True)
class StandardPresentation:
    """phi(s, t_i) = gamma_{v(t_i)}(s + f_i); beta = phi(0, .), alpha = d/ds phi(0, .)."""

    curve: CurveInG
    f: np.ndarray
    beta: np.ndarray
    alpha: np.ndarray
    index_o: int

    @property
    def h(self) -> float:
        return self.curve.h

    def residual(self, i: int) -> float:
        bp = central_difference(self.beta, i, self.h)
        return abs(inner(bp, self.alpha[i]))

    def max_residual(self) -> float:
        """max over interior samples of |<beta', alpha'>| / (1 + |beta'|)."""
        out = 0.0
        for i in range(1, self.curve.size - 1):
            bp = project_tangent(self.beta[i], central_difference(self.beta, i, self.h))
            r = abs(inner(bp, self.alpha[i])) / (1.0 + np.sqrt(max(inner(bp, bp), 0.0)))
            out = max(out, r)
        return out


def _rk4(rhs, t_start: float, f_start: float, h: float, steps: int, substeps: int) -> np.ndarray:
    out = np.empty(steps + 1)
    out[0] = f = f_start
    t = t_start
    dt = h / substeps
    for k in range(steps):
        for _ in range(substeps):
            k1 = rhs(t, f)
            k2 = rhs(t + dt / 2, f + dt * k1 / 2)
            k3 = rhs(t + dt / 2, f + dt * k2 / 2)
            k4 = rhs(t + dt, f + dt * k3)
            f = f + dt * (k1 + 2 * k2 + 2 * k3 + k4) / 6
            t = t + dt
        out[k + 1] = f
    return out


def standard_presentation(c: CurveInG, index_o: int = 0, p=None, substeps: int = 10) -> StandardPresentation:
    """Integrate f' = -<psi_t, psi_s> / |psi_s|^2 from the offset placing phi(0, t_o) at p."""
    if not 0 <= index_o < c.size:
        raise IndexError(f"index {index_o} outside the grid")
    Po, Vo = c.P[index_o], c.V[index_o]
    if p is None:
        p = Po
    p = check_point(p)
    f0 = float(np.arcsinh(inner(p, Vo)))
    on_geo = np.cosh(f0) * Po + np.sinh(f0) * Vo
    if distance(p, on_geo) > 1e-8:
        raise DomainError("p does not lie on the geodesic c(t_o)")

    ts = c.times
    Ps = CubicSpline(ts, c.P, axis=0)
    Vs = CubicSpline(ts, c.V, axis=0)
    dPs = Ps.derivative()
    dVs = Vs.derivative()

    def rhs(t, f):
        ch, sh = np.cosh(f), np.sinh(f)
        pt, vt = Ps(t), Vs(t)
        psi_s = sh * pt + ch * vt
        psi_t = ch * dPs(t) + sh * dVs(t)
        nrm = inner(psi_s, psi_s)
        # unit speed geodesics: |psi_s| stays near 1
        assert nrm > 0.5
        return -inner(psi_t, psi_s) / nrm

    f = np.empty(c.size)
    fwd = _rk4(rhs, ts[index_o], f0, c.h, c.size - 1 - index_o, substeps)
    bwd = _rk4(rhs, ts[index_o], f0, -c.h, index_o, substeps)
    f[index_o:] = fwd
    f[: index_o + 1] = bwd[::-1]

    ch, sh = np.cosh(f)[:, None], np.sinh(f)[:, None]
    beta = ch * c.P + sh * c.V
    alpha = sh * c.P + ch * c.V
    for i in range(c.size):
        beta[i] = normalize_point(beta[i])
        a = project_tangent(beta[i], alpha[i])
        alpha[i] = a / np.sqrt(inner(a, a))
    return StandardPresentation(c, f, beta, alpha, index_o)


def presentation_data(sp: StandardPresentation, i: int) -> tuple[np.ndarray, UnitTangent, np.ndarray]:
    """(beta'(t_i), alpha_{t_i}'(0), D/dt alpha_t'(0)) at an interior sample."""
    bp = project_tangent(sp.beta[i], central_difference(sp.beta, i, sp.h))
    da = covariant_derivative(sp.beta, sp.alpha, i, sp.h)
    return bp, UnitTangent(sp.beta[i], sp.alpha[i]), da


def presentation_gtangent(sp: StandardPresentation, i: int) -> GTangent:
    """Velocity of the curve at t_i as Jacobi data (J0, J1) = (beta', D alpha')."""
    bp, a, da = presentation_data(sp, i)
    J0 = bp - inner(bp, a.v) * a.v
    J1 = da - inner(da, a.v) * a.v
    return GTangent(a, J0, J1)


def causal_classify_g1(sp: StandardPresentation, i: int, band: float = NULL_BAND) -> CausalType:
    """Compare the rate of variation of directions with the rate of displacement.

    Null within band: |b - a| <= band * (a^2 + b^2) / (a + b), where
    a = |D alpha'| and b = |beta'|; this is the same band as the g1 norm test.
    """
    bp, _, da = presentation_data(sp, i)
    a = np.sqrt(max(inner(da, da), 0.0))
    b = np.sqrt(max(inner(bp, bp), 0.0))
    if a + b == 0:
        return CausalType.NULL
    if abs(b - a) <= band * (a * a + b * b) / (a + b):
        return CausalType.NULL
    return CausalType.SPACELIKE if b > a else CausalType.TIMELIKE


def orientation_det(sp: StandardPresentation, i: int) -> float:
    bp, a, da = presentation_data(sp, i)
    return float(np.linalg.det(np.column_stack([a.p, bp, da, a.v])))


def causal_classify_g0(sp: StandardPresentation, i: int, band: float = NULL_BAND) -> CausalType:
    """Orientation of {beta', D alpha', alpha'} in T H^3 (n=2)."""
    MetricChoice("g0").check(sp.curve.n)
    bp, _, da = presentation_data(sp, i)
    scale = inner(bp, bp) + inner(da, da)
    return causal_from_norm(orientation_det(sp, i), scale, band)


def classify_by_norm(sp: StandardPresentation, i: int, metric: MetricChoice, band: float = NULL_BAND) -> tuple[CausalType, float]:
    gt = presentation_gtangent(sp, i)
    value = norm(gt, metric)
    return causal_from_norm(value, gt.scale(), band), value


def velocity_boundary(c: CurveInG, i: int, geos=None) -> BoundaryTangent:
    """Finite-difference derivative of the endpoint pairs of the curve.

    ``geos`` may pass precomputed ``c.geodesics()`` when sweeping all samples.
    """
    geos = c.geodesics() if geos is None else geos
    M = np.array([g.minus for g in geos])
    Q = np.array([g.plus for g in geos])
    dm = central_difference(M, i, c.h)
    dq = central_difference(Q, i, c.h)
    at = geos[i]
    return BoundaryTangent(at, project_sphere(at.minus, dm), project_sphere(at.plus, dq))
