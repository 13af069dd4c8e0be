"""Named test families of curves and random generators used by tests and verify.

All families are orbits of the base geodesic under one-parameter groups or
smooth paths in G, lifted by pushing (e0, e1) forward.
"""
from __future__ import annotations

import numpy as np

from .curves import CurveInG
from .hyperbolic import UnitTangent, base_unit_tangent, geodesic_point
from .linespace import GTangent
from .minkowski import check_group, go_element, h_element, lorentz_frame, mat_exp


def lift_by(g, t0: UnitTangent | None = None) -> UnitTangent:
    n = g.shape[0] - 2
    t0 = base_unit_tangent(n) if t0 is None else t0
    return UnitTangent.renormalized(g @ t0.p, g @ t0.v)


def path_curve(path, h: float, size: int, t0: float = 0.0) -> CurveInG:
    """Curve whose lift at t is path(t) applied to (e0, e1)."""
    ts = t0 + h * np.arange(size)
    return CurveInG.from_lifts(h, (lift_by(path(t)) for t in ts), t0)


def orbit_curve(X, h: float = 1e-3, size: int = 41, t0: float = 0.0) -> CurveInG:
    """t -> exp(tX) c_o with the pushed-forward base tangent as lift."""
    return path_curve(lambda t: mat_exp(X, t), h, size, t0)


def _centered(h, size):
    return -h * (size // 2)


def rotation_family(n: int, direction=None, rate: float = 1.0, h: float = 1e-3, size: int = 41) -> CurveInG:
    """Geodesics through e0 turning from e1 towards ``direction`` at the given rate.

    Jacobi data of the velocity: J(0) = 0, J'(0) = rate * direction.
    """
    d = np.eye(n)[0] if direction is None else np.asarray(direction, dtype=float)
    return orbit_curve(h_element(np.zeros(n), -rate * d), h, size, _centered(h, size))


def translation_family(n: int, x=None, h: float = 1e-3, size: int = 41) -> CurveInG:
    """exp(t x_h) c_o: geodesics pushed along the geodesic through e0 with velocity x."""
    x = np.eye(n)[0] if x is None else np.asarray(x, dtype=float)
    return orbit_curve(h_element(x, np.zeros(n)), h, size, _centered(h, size))


def null_family(n: int, x=None, h: float = 1e-3, size: int = 41) -> CurveInG:
    """exp(t (x_h + x_v)) c_o, an orbit of the null subspace g_1."""
    x = np.eye(n)[0] if x is None else np.asarray(x, dtype=float)
    return orbit_curve(h_element(x, x), h, size, _centered(h, size))


def jacobi_family(x, y, h: float = 1e-3, size: int = 41) -> CurveInG:
    """Geodesic of the line space through c_o whose velocity has Jacobi data (x, y)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return orbit_curve(h_element(x, -y), h, size, _centered(h, size))


def relifted_rotation(n: int, h: float = 1e-3, size: int = 41, offset=np.sin) -> CurveInG:
    """Rotation family whose lift at t is slid by offset(t) along its geodesic."""
    base = rotation_family(n, h=h, size=size)
    ts = base.times
    lifts = [geodesic_point(base.lift(i), float(offset(t))) for i, t in enumerate(ts)]
    return CurveInG.from_lifts(h, lifts, base.t0)


# -- random generators ---------------------------------------------------------


def random_algebra(rng: np.random.Generator, n: int, scale: float = 1.0) -> np.ndarray:
    A = rng.normal(size=(n, n))
    return h_element(rng.normal(size=n), rng.normal(size=n)) * scale + go_element(rng.normal(), A - A.T) * scale


def random_group(rng: np.random.Generator, n: int, scale: float = 1.0) -> np.ndarray:
    """exp of a random algebra element, rescaled so that |log g| <= 2 * scale."""
    X = random_algebra(rng, n)
    X *= 2.0 * scale * rng.uniform() / np.linalg.norm(X, 2)
    return check_group(mat_exp(X))


def random_unit_tangent(rng: np.random.Generator, n: int, scale: float = 1.0) -> UnitTangent:
    return lift_by(random_group(rng, n, scale))


def random_gtangent(rng: np.random.Generator, n: int, scale: float = 1.0) -> GTangent:
    base = random_unit_tangent(rng, n, scale)
    g = lorentz_frame(base.p, base.v)
    J0 = g @ np.concatenate([[0.0, 0.0], rng.normal(size=n)])
    J1 = g @ np.concatenate([[0.0, 0.0], rng.normal(size=n)])
    return GTangent(base, J0, J1)


def random_curve(rng: np.random.Generator, n: int, h: float = 1e-3, size: int = 41, scale: float = 1.0) -> CurveInG:
    """Lift t -> g exp(t A) exp(t^2 B) (e0, e1) with random g, A, B."""
    g = random_group(rng, n, scale)
    A = random_algebra(rng, n, scale)
    B = random_algebra(rng, n, scale)
    return path_curve(lambda t: g @ mat_exp(A, t) @ mat_exp(B, t * t), h, size, _centered(h, size))


# -- named fixtures --------------------------------------------------------------

# expected causal labels (g1, g0); g0 only for n=2
EXPECTED_LABELS = {
    "rotation": ("Timelike", "Null"),
    "translation": ("Spacelike", "Null"),
    "null": ("Null", "Null"),
    "relifted_rotation": ("Timelike", "Null"),
    "jacobi_g0_positive": ("Null", "Spacelike"),
    "jacobi_g0_negative": ("Null", "Timelike"),
}


def named_families(n: int) -> dict[str, CurveInG]:
    """The golden test curves, sampled with h = 1e-3 on 41 points centred at t = 0."""
    out = {
        "rotation": rotation_family(n),
        "translation": translation_family(n),
        "null": null_family(n),
        "relifted_rotation": relifted_rotation(n),
    }
    if n == 2:
        out["jacobi_g0_positive"] = jacobi_family([1.0, 0.0], [0.0, 1.0])
        out["jacobi_g0_negative"] = jacobi_family([1.0, 0.0], [0.0, -1.0])
    return out
