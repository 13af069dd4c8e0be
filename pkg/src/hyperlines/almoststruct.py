"""Complex structures on the geodesic space.

* n=2: the invariant structure j_o, acting as (x, y) -> (ix, iy) on Jacobi
  data at the base geodesic, and a numerical Kahler check.
* n=6: octonions, the cross product on R^7 = Im O, the structure
  J(x, y) = (p x x, T (p x T y)) on pairs of ideal points, and a
  finite-difference Nijenhuis tensor.

Octonions use Cayley-Dickson doubling of the quaternions with e4 as the new
unit: e1 e2 = e3, e1 e4 = e5, e2 e4 = e6, e3 e4 = e7.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .boundary import BoundaryTangent, d_pair_action, project_sphere, reflection_T
from .errors import DomainError, FeatureError
from .linespace import GTangent, OrientedGeodesic, push_forward, to_base_coords
from .minkowski import inner, lorentz_frame, mat_exp

# -- octonions -----------------------------------------------------------------


def quat_mul(a, b) -> np.ndarray:
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return np.array([
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ])


def quat_conj(a) -> np.ndarray:
    return np.array([a[0], -a[1], -a[2], -a[3]])


def oct_mul(a, b) -> np.ndarray:
    """(p, q)(r, s) = (pr - s* q, s p + q r*)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    p, q = a[:4], a[4:]
    r, s = b[:4], b[4:]
    return np.concatenate([
        quat_mul(p, r) - quat_mul(quat_conj(s), q),
        quat_mul(s, p) + quat_mul(q, quat_conj(r)),
    ])


def oct_conj(a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    return np.concatenate([[a[0]], -a[1:]])


def oct_unit(k: int) -> np.ndarray:
    e = np.zeros(8)
    e[k] = 1.0
    return e


def cross7(u, v) -> np.ndarray:
    """Cross product on R^7 = Im O: the imaginary part of uv."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return oct_mul(np.concatenate([[0.0], u]), np.concatenate([[0.0], v]))[1:]


def _structure_constants() -> np.ndarray:
    C = np.zeros((7, 7, 7))
    eye = np.eye(7)
    for i in range(7):
        for j in range(7):
            C[i, j] = cross7(eye[i], eye[j])
    return C


CROSS7 = _structure_constants()


def cross7_matrix(p) -> np.ndarray:
    """Matrix of x -> p x x."""
    return np.einsum("i,ijk->kj", np.asarray(p, dtype=float), CROSS7)


# -- S^6 and the pair space ------------------------------------------------------


def _check_s6(p, x):
    p = np.asarray(p, dtype=float)
    x = np.asarray(x, dtype=float)
    if p.shape != (7,) or x.shape != (7,):
        raise FeatureError("the octonionic structure lives on S^6 in R^7 (n=6)")
    if abs(np.linalg.norm(p) - 1) > 1e-9:
        raise DomainError("p must be a unit vector")
    if abs(p @ x) > 1e-9 * max(1.0, float(np.max(np.abs(x)))):
        raise DomainError("x must be tangent at p")
    return p, x


def j_sphere(p, x) -> np.ndarray:
    p, x = _check_s6(p, x)
    return cross7(p, x)


def j_pq(p, q, y) -> np.ndarray:
    """T_{p,q} o j_p o T_{p,q} on the tangent space at q."""
    q, y = _check_s6(q, y)
    p = np.asarray(p, dtype=float)
    Ty = reflection_T(p, q, y)
    return reflection_T(p, q, cross7(p, Ty))


def big_J(bt: BoundaryTangent) -> BoundaryTangent:
    p, q = bt.at.minus, bt.at.plus
    if p.shape != (7,):
        raise FeatureError(f"J needs n=6, got n={p.shape[0] - 1}")
    return BoundaryTangent(bt.at, j_sphere(p, bt.xi_minus), j_pq(p, q, bt.xi_plus))


def j_equivariance_defect(g, bt: BoundaryTangent) -> float:
    """|d g_hat (J bt) - J (d g_hat bt)|, relative to |bt|. Reported, not asserted."""
    lhs = d_pair_action(g, big_J(bt))
    rhs = big_J(d_pair_action(g, bt))
    scale = max(np.linalg.norm(bt.as_vector()), 1e-300)
    return float(np.linalg.norm(lhs.as_vector() - rhs.as_vector()) / scale)


# -- Nijenhuis tensor by finite differences --------------------------------------


def _J_field(m: np.ndarray, w: np.ndarray) -> np.ndarray:
    """J at the normalized pair of m = (p, q) in R^14 applied to w, tangentially projected first."""
    p = m[:7] / np.linalg.norm(m[:7])
    q = m[7:] / np.linalg.norm(m[7:])
    a = project_sphere(p, w[:7])
    b = project_sphere(q, w[7:])
    ja = cross7(p, a)
    jb = reflection_T(p, q, cross7(p, reflection_T(p, q, b)))
    return np.concatenate([ja, jb])


def _const_field(c: np.ndarray):
    def field(m):
        p = m[:7] / np.linalg.norm(m[:7])
        q = m[7:] / np.linalg.norm(m[7:])
        return np.concatenate([project_sphere(p, c[:7]), project_sphere(q, c[7:])])

    return field


def _bracket(A, B, m, h):
    """[A, B](m) = DB(m)[A(m)] - DA(m)[B(m)] with central differences."""
    a, b = A(m), B(m)
    dB = (B(m + h * a) - B(m - h * a)) / (2 * h)
    dA = (A(m + h * b) - A(m - h * b)) / (2 * h)
    return dB - dA


def _nijenhuis_raw(m, xi, eta, h):
    X = _const_field(xi)
    Y = _const_field(eta)
    JX = lambda z: _J_field(z, X(z))  # noqa: E731
    JY = lambda z: _J_field(z, Y(z))  # noqa: E731
    J = lambda w: _J_field(m, w)  # noqa: E731
    return _bracket(JX, JY, m, h) - J(_bracket(JX, Y, m, h)) - J(_bracket(X, JY, m, h)) - _bracket(X, Y, m, h)


@dataclass(frozen=True)
class NijenhuisResult:
    value: BoundaryTangent  # Richardson-extrapolated N(xi, eta)
    coarse: np.ndarray
    fine: np.ndarray
    finer: np.ndarray

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.value.as_vector()))

    @property
    def fd_change(self) -> float:
        """|N(h) - N(h/2)|, the finite-difference error estimate."""
        return float(np.linalg.norm(self.coarse - self.fine))

    @property
    def richardson_ratio(self) -> float:
        """|N(h) - N(h/2)| / |N(h/2) - N(h/4)|, about 4 for an O(h^2) error, noise if converged."""
        den = np.linalg.norm(self.fine - self.finer)
        return float(np.linalg.norm(self.coarse - self.fine) / den) if den > 0 else float("inf")


def nijenhuis(at: OrientedGeodesic, xi: BoundaryTangent, eta: BoundaryTangent, h: float = 1e-4) -> NijenhuisResult:
    """N(xi, eta) = [JX, JY] - J[JX, Y] - J[X, JY] - [X, Y] at the pair ``at``.

    X, Y extend xi, eta by tangential projection of constant fields.
    """
    if at.minus.shape != (7,):
        raise FeatureError(f"Nijenhuis certificate needs n=6, got n={at.n}")
    m = np.concatenate([at.minus, at.plus])
    a = xi.as_vector()
    b = eta.as_vector()
    N1 = _nijenhuis_raw(m, a, b, h)
    N2 = _nijenhuis_raw(m, a, b, h / 2)
    N4 = _nijenhuis_raw(m, a, b, h / 4)
    rich = (4 * N2 - N1) / 3
    value = BoundaryTangent.projected(at, rich[:7], rich[7:])
    return NijenhuisResult(value, N1, N2, N4)


# -- the Kahler structure on the space of geodesics of H^3 ------------------------


def _i(w):
    return np.array([-w[1], w[0]])


def j0_G3(gt: GTangent, frame=None) -> GTangent:
    """(J(0), J'(0)) -> (i J(0), i J'(0)) in a Lorentz frame at the base (n=2)."""
    if gt.n != 2:
        raise FeatureError(f"j_o needs n=2, got n={gt.n}")
    g = lorentz_frame(gt.base.p, gt.base.v) if frame is None else frame
    x, y = to_base_coords(gt, g)
    J0 = g @ np.concatenate([[0.0, 0.0], _i(x)])
    J1 = g @ np.concatenate([[0.0, 0.0], _i(y)])
    return GTangent(gt.base, J0, J1)


def _gt_distance(a: GTangent, b: GTangent) -> float:
    # positive combination of the g1 components: sqrt(|dJ0|^2 + |dJ1|^2)
    d0 = a.J0 - b.J0
    d1 = a.J1 - b.J1
    return float(np.sqrt(max(inner(d0, d0), 0.0) + max(inner(d1, d1), 0.0)))


def kahler_parallel_check(
    X,
    gt0: GTangent,
    T: float,
    steps: int = 20,
    structure: Callable[[GTangent], GTangent] = j0_G3,
) -> float:
    """Max over t in [0, T] of |structure(Y(t)) - d exp(tX) structure(Y(0))|, relative.

    Y(t) = d exp(tX) Y(0) is parallel along the geodesic exp(tX) c_o, so a
    deviation of zero means structure(Y) is parallel too.
    """
    if gt0.n != 2:
        raise FeatureError("the Kahler check is for n=2")
    jY0 = structure(gt0)
    scale = max(np.sqrt(gt0.scale()), 1e-300)
    worst = 0.0
    for t in np.linspace(0.0, T, steps + 1):
        g = mat_exp(X, t)
        Yt = push_forward(g, gt0)
        lhs = structure(Yt)
        rhs = push_forward(g, jY0)
        worst = max(worst, _gt_distance(lhs, rhs) / scale)
    return worst


def skewed_structure(gt: GTangent) -> GTangent:
    """A non-invariant almost complex structure: (x, y) -> (Dx, Dy), D = [[0, -2], [1/2, 0]].

    D^2 = -1 but D does not commute with rotations, so the result depends on
    the frame completion. Used as a negative control for the Kahler check.
    """
    g = lorentz_frame(gt.base.p, gt.base.v)
    x, y = to_base_coords(gt, g)
    D = np.array([[0.0, -2.0], [0.5, 0.0]])
    return GTangent(gt.base, g @ np.concatenate([[0.0, 0.0], D @ x]), g @ np.concatenate([[0.0, 0.0], D @ y]))
