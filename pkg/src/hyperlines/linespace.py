"""The space of oriented geodesics of H^{n+1} as the homogeneous space G/G_o.

An oriented geodesic is stored canonically by its pair of ideal endpoints.
Tangent vectors are orthogonal Jacobi data along a chosen unit-speed
parametrization; their g1 and g0 norms are the invariant metrics.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .config import DIAGONAL_GUARD, FRONTIER_BAND, NULL_BAND, TOL_POINT
from .errors import DimensionError, DomainError, FeatureError
from .hyperbolic import (
    UnitTangent,
    base_unit_tangent,
    check_tangent,
    geodesic_point,
    ideal_endpoints,
    jacobi_eval,
    log_map,
    origin,
    parallel_transport,
)
from .minkowski import (
    Ad,
    algebra_split,
    bracket,
    check_algebra,
    check_group,
    go_element,
    h_element,
    inner,
    killing_B,
    lorentz_frame,
    lorentz_inverse,
    mat_exp,
)


@dataclass(frozen=True)
class OrientedGeodesic:
    """Ordered pair (gamma(-inf), gamma(+inf)) of distinct ideal points."""

    minus: np.ndarray
    plus: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.minus, dtype=float)
        p = np.asarray(self.plus, dtype=float)
        if m.shape != p.shape or m.ndim != 1 or m.shape[0] < 2:
            raise DimensionError("ideal points must be vectors of equal length >= 2")
        for z in (m, p):
            if abs(np.linalg.norm(z) - 1.0) > 1e-9:
                raise DomainError("ideal point is not a unit vector")
        if np.linalg.norm(m - p) < DIAGONAL_GUARD:
            raise DomainError("endpoints coincide (diagonal pair)")
        object.__setattr__(self, "minus", m / np.linalg.norm(m))
        object.__setattr__(self, "plus", p / np.linalg.norm(p))

    @property
    def n(self) -> int:
        return self.minus.shape[0] - 1

    def distance_to(self, other: "OrientedGeodesic") -> float:
        return float(max(np.linalg.norm(self.minus - other.minus), np.linalg.norm(self.plus - other.plus)))


def base_geodesic(n: int) -> OrientedGeodesic:
    """c_o = [gamma_o], the geodesic through e0 with velocity e1."""
    e = np.zeros(n + 1)
    e[0] = 1.0
    return OrientedGeodesic(-e, e)


def from_unit_tangent(t0: UnitTangent) -> OrientedGeodesic:
    m, p = ideal_endpoints(t0)
    return OrientedGeodesic(m, p)


def base_tangent(geo: OrientedGeodesic) -> UnitTangent:
    """Canonical (gamma(0), gamma'(0)) of the geodesic, from the null vectors e0 + p, e0 + q."""
    u = np.concatenate([[1.0], geo.minus])
    w = np.concatenate([[1.0], geo.plus])
    d = np.linalg.norm(geo.plus - geo.minus)
    return UnitTangent.renormalized((u + w) / d, (w - u) / d)


def minitwistor_F(v, x) -> OrientedGeodesic:
    """Geodesic through Exp_{e0}(x) whose direction is v transported along t -> Exp(tx)."""
    v = np.asarray(v, dtype=float)
    x = np.asarray(x, dtype=float)
    o = origin(v.shape[0] - 2)
    check_tangent(o, v)
    check_tangent(o, x)
    if abs(inner(v, v) - 1) > 1e-10:
        raise DomainError("v must be a unit vector")
    if abs(inner(v, x)) > 1e-10 * max(1.0, float(np.linalg.norm(x))):
        raise DomainError("x must be orthogonal to v")
    r = math.sqrt(max(inner(x, x), 0.0))
    if r == 0:
        return from_unit_tangent(UnitTangent(o, v))
    radial = UnitTangent(o, x / r)
    q = geodesic_point(radial, r).p
    w = parallel_transport(radial, r, v)
    return from_unit_tangent(UnitTangent.renormalized(q, w))


def closest_point(geo: OrientedGeodesic) -> UnitTangent:
    """Foot of the perpendicular from e0 to the geodesic, with the geodesic direction there.

    t -> -<e0, gamma(t)> = cosh t P0 + sinh t V0 is minimized at tanh t = -V0/P0.
    """
    b = base_tangent(geo)
    t = math.atanh(-b.v[0] / b.p[0])
    return geodesic_point(b, t)


def minitwistor_F_inv(geo: OrientedGeodesic) -> tuple[np.ndarray, np.ndarray]:
    foot = closest_point(geo)
    o = origin(geo.n)
    x = log_map(o, foot.p)
    r = math.sqrt(max(inner(x, x), 0.0))
    if r == 0:
        return foot.v.copy(), np.zeros_like(o)
    radial = UnitTangent(o, x / r)
    back = geodesic_point(radial, r)
    # transport the direction back to e0 along the radial geodesic
    v = parallel_transport(UnitTangent(back.p, -back.v), r, foot.v)
    return v / math.sqrt(inner(v, v)), x


class CausalType(enum.Enum):
    SPACELIKE = "Spacelike"
    TIMELIKE = "Timelike"
    NULL = "Null"

    def __str__(self):
        return self.value


def causal_from_norm(value: float, scale: float, band: float = NULL_BAND) -> CausalType:
    if abs(value) <= band * scale:
        return CausalType.NULL
    return CausalType.SPACELIKE if value > 0 else CausalType.TIMELIKE


@dataclass(frozen=True)
class MetricChoice:
    """Which invariant metric: g1, g0 (n=2) or lam * g0 + mu * g1 (n=2)."""

    kind: str = "g1"
    lam: float = 0.0
    mu: float = 1.0

    def __post_init__(self):
        if self.kind not in ("g1", "g0", "combo"):
            raise DomainError(f"unknown metric {self.kind!r}")
        if self.kind == "combo" and self.lam == 0 and self.mu == 0:
            raise DomainError("combo metric needs (lam, mu) != (0, 0)")

    @classmethod
    def parse(cls, text: str) -> "MetricChoice":
        text = text.strip().lower()
        if text in ("g1", "g0"):
            return cls(text)
        if text.startswith("combo"):
            _, _, args = text.partition(":")
            try:
                lam, mu = (float(a) for a in args.split(","))
            except ValueError as exc:
                raise DomainError(f"combo metric must read combo:lam,mu, got {text!r}") from exc
            return cls("combo", lam, mu)
        raise DomainError(f"unknown metric {text!r}")

    def check(self, n: int):
        if self.kind != "g1" and n != 2:
            raise FeatureError(f"metric {self.kind} is only defined for n=2, got n={n}")

    def __str__(self):
        return self.kind if self.kind != "combo" else f"combo:{self.lam},{self.mu}"


G1 = MetricChoice("g1")
G0 = MetricChoice("g0")


@dataclass(frozen=True)
class GTangent:
    """Tangent vector L(J) at [gamma], given by Jacobi data J(0)=J0, J'(0)=J1 at base."""

    base: UnitTangent
    J0: np.ndarray
    J1: np.ndarray

    def __post_init__(self):
        p, v = self.base.p, self.base.v
        J0 = check_tangent(p, self.J0)
        J1 = check_tangent(p, self.J1)
        s = max(1.0, float(np.max(np.abs(p))), float(np.max(np.abs(J0))), float(np.max(np.abs(J1))))
        if abs(inner(J0, v)) > TOL_POINT * s * s or abs(inner(J1, v)) > TOL_POINT * s * s:
            raise DomainError("Jacobi data must be orthogonal to the geodesic direction")
        object.__setattr__(self, "J0", J0)
        object.__setattr__(self, "J1", J1)

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def geodesic(self) -> OrientedGeodesic:
        return from_unit_tangent(self.base)

    def scale(self) -> float:
        return inner(self.J0, self.J0) + inner(self.J1, self.J1)


def gtangent_at_base(x, y) -> GTangent:
    """Tangent at c_o corresponding to x_h + y_v: J0 = x, J1 = y in e2..e_{n+1}."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n = x.shape[0]
    return GTangent(base_unit_tangent(n), np.concatenate([[0.0, 0.0], x]), np.concatenate([[0.0, 0.0], y]))


def velocity_at_base(X) -> GTangent:
    """Velocity of s -> exp(sX) c_o at s=0, for X = x_h + y_v in h.

    y_v turns e1 towards -y, so the variation exp(s x_h) exp(s y_v) gamma_o
    has Jacobi data J(0) = x, J'(0) = -y.
    """
    sp = algebra_split(_check_h(X))
    return gtangent_at_base(sp.x, -sp.y)


def slide(gt: GTangent, t: float) -> GTangent:
    """Same tangent vector, with the base moved by t along the geodesic."""
    J0, J1 = jacobi_eval(gt.base, gt.J0, gt.J1, t)
    return GTangent(geodesic_point(gt.base, t), J0, J1)


def norm_g1(gt: GTangent) -> float:
    return inner(gt.J0, gt.J0) - inner(gt.J1, gt.J1)


def _oriented_volume(p, a, b, c) -> float:
    # positive iff (a, b, c) is a positive basis of T_pH^3, i.e. det[p a b c] > 0
    return float(np.linalg.det(np.column_stack([p, a, b, c])))


def norm_g0(gt: GTangent) -> float:
    """<u x J0, J1> in the oriented tangent space T_pH^3 (n=2 only)."""
    if gt.n != 2:
        raise FeatureError(f"g0 is only defined for n=2, got n={gt.n}")
    return _oriented_volume(gt.base.p, gt.base.v, gt.J0, gt.J1)


def norm_combo(gt: GTangent, lam: float, mu: float) -> float:
    if lam == 0 and mu == 0:
        raise DomainError("(lam, mu) must not both vanish")
    if gt.n != 2:
        raise FeatureError(f"combined metrics need n=2, got n={gt.n}")
    return lam * norm_g0(gt) + mu * norm_g1(gt)


def norm(gt: GTangent, metric: MetricChoice = G1) -> float:
    metric.check(gt.n)
    if metric.kind == "g1":
        return norm_g1(gt)
    if metric.kind == "g0":
        return norm_g0(gt)
    return norm_combo(gt, metric.lam, metric.mu)


def push_forward(g, gt: GTangent) -> GTangent:
    g = check_group(g)
    p, v = g @ gt.base.p, g @ gt.base.v
    base = UnitTangent.renormalized(p, v)
    J0 = g @ gt.J0
    J1 = g @ gt.J1
    J0 = J0 + inner(J0, base.p) * base.p - inner(J0, base.v) * base.v
    J1 = J1 + inner(J1, base.p) * base.p - inner(J1, base.v) * base.v
    return GTangent(base, J0, J1)


def to_base_coords(gt: GTangent, frame=None) -> tuple[np.ndarray, np.ndarray]:
    """(x, y) of the tangent after moving its base to (e0, e1) by a Lorentz frame."""
    g = lorentz_frame(gt.base.p, gt.base.v) if frame is None else frame
    gi = lorentz_inverse(g)
    return (gi @ gt.J0)[2:], (gi @ gt.J1)[2:]


# -- geodesics of the line space ------------------------------------------


def _check_h(X) -> np.ndarray:
    X = check_algebra(X)
    sp = algebra_split(X)
    if np.max(np.abs(sp.go_part)) > 1e-10 * max(1.0, float(np.max(np.abs(X)))):
        raise DomainError("element is not in h (non-zero isotropy component)")
    return X


def geodesic_in_G(X, s: float) -> OrientedGeodesic:
    """exp(sX) c_o for X in h."""
    X = _check_h(X)
    n = X.shape[0] - 2
    g = mat_exp(X, s)
    t0 = base_unit_tangent(n)
    return from_unit_tangent(UnitTangent.renormalized(g @ t0.p, g @ t0.v))


@dataclass(frozen=True)
class Periodicity:
    periodic: bool
    period: float | None = None
    ratio: float | None = None  # lambda in x = lambda y, when x and y are parallel

    def __str__(self):
        return f"Periodic({self.period!r})" if self.periodic else "NonPeriodic"


def classify_periodic(X, band: float = FRONTIER_BAND, parallel_tol: float = 1e-10) -> Periodicity:
    """Periodic iff x = lam y with |lam| < 1; period 2 pi / (sqrt(1 - lam^2) |y|)."""
    X = _check_h(X)
    sp = algebra_split(X)
    x, y = sp.x, sp.y
    nx, ny = float(np.linalg.norm(x)), float(np.linalg.norm(y))
    if nx == 0 and ny == 0:
        raise DomainError("the zero vector has no geodesic to classify")
    if ny == 0:
        return Periodicity(False)
    lam = float(x @ y) / ny**2
    if np.linalg.norm(x - lam * y) > parallel_tol * max(nx, ny):
        return Periodicity(False)
    if abs(lam) >= 1.0 - band:
        return Periodicity(False, ratio=lam)
    return Periodicity(True, 2 * math.pi / (math.sqrt(1 - lam * lam) * ny), lam)


# -- the algebra h at c_o ---------------------------------------------------


def h_basis(n: int) -> list[np.ndarray]:
    """x_h-units followed by y_v-units."""
    eye = np.eye(n)
    return [h_element(eye[k], np.zeros(n)) for k in range(n)] + [h_element(np.zeros(n), eye[k]) for k in range(n)]


def h_vector(X) -> np.ndarray:
    sp = algebra_split(X)
    return np.concatenate([sp.x, sp.y])


def g1_form(X, Y) -> float:
    return killing_B(X, Y)


def g0_form(X, Y) -> float:
    """Polarization of <ix, y> on h (n=2), with i(a, b) = (-b, a)."""
    a, b = algebra_split(X), algebra_split(Y)
    if a.x.shape[0] != 2:
        raise FeatureError("g0 is only defined for n=2")

    def ip(u, w):
        return -u[1] * w[0] + u[0] * w[1]

    return 0.5 * (ip(a.x, b.y) + ip(b.x, a.y))


def metric_form(metric: MetricChoice, X, Y) -> float:
    n = np.shape(X)[0] - 2
    metric.check(n)
    if metric.kind == "g1":
        return g1_form(X, Y)
    if metric.kind == "g0":
        return g0_form(X, Y)
    return metric.lam * g0_form(X, Y) + metric.mu * g1_form(X, Y)


def gram_at_base(metric: MetricChoice, n: int) -> np.ndarray:
    metric.check(n)
    E = h_basis(n)
    return np.array([[metric_form(metric, a, b) for b in E] for a in E])


def signature(M, tol: float = 1e-10) -> tuple[int, int]:
    w = np.linalg.eigvalsh(M)
    return int(np.sum(w > tol)), int(np.sum(w < -tol))


def curvature_at_base(X, Y, tol: float = 1e-8) -> float:
    """Sectional curvature of span{X, Y} at c_o for g1 via R(X, Y)Y = -[[X, Y], Y]."""
    X = _check_h(X)
    Y = _check_h(Y)
    Q = g1_form(X, X) * g1_form(Y, Y) - g1_form(X, Y) ** 2
    s = max(np.linalg.norm(X), np.linalg.norm(Y)) ** 4
    if abs(Q) <= tol * max(s, 1e-300):
        raise DomainError("degenerate plane")
    R = -bracket(bracket(X, Y), Y)
    return g1_form(R, X) / Q


def ad_on_h(g) -> np.ndarray:
    """Matrix of Ad(g) restricted to h in the basis of :func:`h_basis` (g in G_o)."""
    n = g.shape[0] - 2
    return np.column_stack([h_vector(Ad(g, E)) for E in h_basis(n)])


def random_isotropy(rng: np.random.Generator, n: int, scale: float = 1.0) -> np.ndarray:
    A = rng.normal(size=(n, n)) * scale
    return mat_exp(go_element(rng.normal() * scale, A - A.T))


def invariant_forms(n: int, rng: np.random.Generator, samples: int = 6) -> tuple[int, np.ndarray, list[np.ndarray]]:
    """Dimension of the space of G_o-invariant symmetric bilinear forms on h.

    Stacks M^T S M = S for random M = Ad(g)|h, g in G_o, over symmetric S,
    and counts singular values below 1e-6 of the largest. Returns the
    dimension, the normalized singular values and a basis of solutions.
    """
    m = 2 * n
    iu = np.triu_indices(m)
    basis_syms = []
    for a, b in zip(*iu):
        S = np.zeros((m, m))
        S[a, b] = S[b, a] = 1.0
        basis_syms.append(S)
    rows = []
    for _ in range(samples):
        M = ad_on_h(random_isotropy(rng, n))
        rows.append(np.column_stack([(M.T @ S @ M - S).ravel() for S in basis_syms]))
    L = np.vstack(rows)
    _, sv, vt = np.linalg.svd(L)
    sv = sv / sv[0]
    full = np.zeros(len(basis_syms))
    full[: len(sv)] = sv
    null = full <= 1e-6
    sols = [sum(c * S for c, S in zip(vt[k], basis_syms)) for k in np.nonzero(null)[0]]
    return int(null.sum()), full, sols

