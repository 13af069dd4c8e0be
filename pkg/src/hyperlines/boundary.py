"""Pairs of distinct ideal points as a model of the geodesic space.

The metric on (S^n x S^n) minus the diagonal is
``4 <T_{p,q} x, y> / |q - p|^2`` for x tangent at p and y tangent at q,
where T_{p,q} reflects across the hyperplane orthogonal to p - q. With it
the endpoint map is an isometry for g1.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import DIAGONAL_GUARD
from .errors import DimensionError, DomainError
from .linespace import GTangent, OrientedGeodesic, from_unit_tangent, to_base_coords
from .minkowski import check_group, lorentz_frame

# The pair model shares the canonical storage of an oriented geodesic.
BoundaryPair = OrientedGeodesic


def _unit(z) -> np.ndarray:
    z = np.asarray(z, dtype=float)
    if abs(np.linalg.norm(z) - 1.0) > 1e-9:
        raise DomainError("ideal point is not a unit vector")
    return z


def _normal(p, q) -> np.ndarray:
    d = np.asarray(p, dtype=float) - np.asarray(q, dtype=float)
    nd = np.linalg.norm(d)
    if nd < DIAGONAL_GUARD:
        raise DomainError("reflection T_{p,q} needs p != q")
    return d / nd


def reflection_T(p, q, x) -> np.ndarray:
    nh = _normal(p, q)
    x = np.asarray(x, dtype=float)
    return x - 2.0 * (x @ nh) * nh


def project_sphere(z, xi) -> np.ndarray:
    z = np.asarray(z, dtype=float)
    xi = np.asarray(xi, dtype=float)
    return xi - (xi @ z) * z


@dataclass(frozen=True)
class BoundaryTangent:
    """Tangent (xi_minus, xi_plus) to the pair space at ``at``."""

    at: OrientedGeodesic
    xi_minus: np.ndarray
    xi_plus: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.xi_minus, dtype=float)
        b = np.asarray(self.xi_plus, dtype=float)
        if a.shape != self.at.minus.shape or b.shape != self.at.plus.shape:
            raise DimensionError("tangent components must match the ideal points")
        s = max(1.0, float(np.max(np.abs(a))), float(np.max(np.abs(b))))
        if abs(a @ self.at.minus) > 1e-10 * s or abs(b @ self.at.plus) > 1e-10 * s:
            raise DomainError("components are not tangent to the spheres")
        object.__setattr__(self, "xi_minus", a)
        object.__setattr__(self, "xi_plus", b)

    @classmethod
    def projected(cls, at: OrientedGeodesic, a, b) -> "BoundaryTangent":
        return cls(at, project_sphere(at.minus, a), project_sphere(at.plus, b))

    def __add__(self, other: "BoundaryTangent") -> "BoundaryTangent":
        return BoundaryTangent(self.at, self.xi_minus + other.xi_minus, self.xi_plus + other.xi_plus)

    def __neg__(self) -> "BoundaryTangent":
        return BoundaryTangent(self.at, -self.xi_minus, -self.xi_plus)

    def __mul__(self, c: float) -> "BoundaryTangent":
        return BoundaryTangent(self.at, c * self.xi_minus, c * self.xi_plus)

    __rmul__ = __mul__

    def as_vector(self) -> np.ndarray:
        return np.concatenate([self.xi_minus, self.xi_plus])


def norm_mss(bt: BoundaryTangent) -> float:
    p, q = bt.at.minus, bt.at.plus
    return 4.0 * float(reflection_T(p, q, bt.xi_minus) @ bt.xi_plus) / float(np.sum((q - p) ** 2))


def mss_form(a: BoundaryTangent, b: BoundaryTangent) -> float:
    """Bilinear form of :func:`norm_mss`, by polarization."""
    p, q = a.at.minus, a.at.plus
    T = lambda x: reflection_T(p, q, x)  # noqa: E731
    return 2.0 * float(T(a.xi_minus) @ b.xi_plus + T(b.xi_minus) @ a.xi_plus) / float(np.sum((q - p) ** 2))


def _lift(z) -> np.ndarray:
    return np.concatenate([[1.0], z])


def mobius_action(g, z) -> np.ndarray:
    """Conformal action on S^n induced by g: the endpoint of g applied to a ray towards z."""
    g = check_group(g)
    z = _unit(z)
    w = g @ _lift(z)
    out = w[1:] / w[0]
    return out / np.linalg.norm(out)


def d_mobius(g, z, xi) -> np.ndarray:
    """Differential of :func:`mobius_action` at z applied to xi (quotient rule)."""
    g = check_group(g)
    z = _unit(z)
    xi = np.asarray(xi, dtype=float)
    if abs(xi @ z) > 1e-10 * max(1.0, float(np.max(np.abs(xi)))):
        raise DomainError("xi is not tangent to the sphere at z")
    w = g @ _lift(z)
    dw = g @ np.concatenate([[0.0], xi])
    out = (dw[1:] * w[0] - w[1:] * dw[0]) / w[0] ** 2
    image = w[1:] / w[0]
    return project_sphere(image / np.linalg.norm(image), out)


def pair_action(g, bp: OrientedGeodesic) -> OrientedGeodesic:
    return OrientedGeodesic(mobius_action(g, bp.minus), mobius_action(g, bp.plus))


def d_pair_action(g, bt: BoundaryTangent) -> BoundaryTangent:
    at = pair_action(g, bt.at)
    return BoundaryTangent(at, d_mobius(g, bt.at.minus, bt.xi_minus), d_mobius(g, bt.at.plus, bt.xi_plus))


def psi(t0) -> OrientedGeodesic:
    """Endpoint map on unit tangents (alias of :func:`from_unit_tangent`)."""
    return from_unit_tangent(t0)


def jacobi_to_boundary(gt: GTangent) -> BoundaryTangent:
    """Image of L(J) under the differential of the endpoint map.

    At the base geodesic, (J(0), J'(0)) = (x, y) maps to (x - y, x + y);
    elsewhere this is transported by the frame taking (e0, e1) to the base.
    """
    g = lorentz_frame(gt.base.p, gt.base.v)
    x, y = to_base_coords(gt, g)
    n = gt.n
    e = np.zeros(n + 1)
    e[0] = 1.0
    at_base = OrientedGeodesic(-e, e)
    xs = np.concatenate([[0.0], x])
    ys = np.concatenate([[0.0], y])
    bt = BoundaryTangent(at_base, xs - ys, xs + ys)
    return d_pair_action(g, bt)
