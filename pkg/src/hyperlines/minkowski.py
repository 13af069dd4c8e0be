"""Lorentz linear algebra on R^{n+2} with the form -x0^2 + x1^2 + ... + x_{n+1}^2.

Matrices of the Lie algebra so(1, n+1) are plain ``(n+2, n+2)`` numpy arrays.
The subalgebra fixing the base geodesic (through e0 with velocity e1) is
``diag(t R, A)``; its B-orthogonal complement ``h`` is parametrized by two
n-vectors ``(x, y)`` through :func:`x_h` and :func:`y_v`.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .config import T_MAX, TOL_ALGEBRA
from .errors import DimensionError, DomainError, RangeError


def eta(dim: int) -> np.ndarray:
    d = np.ones(dim)
    d[0] = -1.0
    return np.diag(d)


def inner(a, b) -> float:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise DimensionError(f"length mismatch: {a.shape} vs {b.shape}")
    return float(-a[0] * b[0] + a[1:] @ b[1:])


def lorentz_norm2(a) -> float:
    return inner(a, a)


def basis(dim: int, i: int) -> np.ndarray:
    e = np.zeros(dim)
    e[i] = 1.0
    return e


def _scale(*arrays) -> float:
    return max(1.0, *(float(np.max(np.abs(a))) for a in arrays))


def algebra_defect(X) -> float:
    X = np.asarray(X, dtype=float)
    E = eta(X.shape[0])
    return float(np.max(np.abs(X.T @ E + E @ X)))


def check_algebra(X, tol: float = TOL_ALGEBRA) -> np.ndarray:
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[0] != X.shape[1] or X.shape[0] < 3:
        raise DimensionError(f"expected a square matrix of size >= 3, got {X.shape}")
    if algebra_defect(X) > tol * _scale(X):
        raise DomainError("matrix is not in so(1, n+1)")
    return X


def check_group(g, tol: float = 1e-9) -> np.ndarray:
    """Validate membership in the identity component of O(1, n+1)."""
    g = np.asarray(g, dtype=float)
    if g.ndim != 2 or g.shape[0] != g.shape[1]:
        raise DimensionError(f"expected a square matrix, got {g.shape}")
    E = eta(g.shape[0])
    if np.max(np.abs(g.T @ E @ g - E)) > tol * _scale(g) ** 2:
        raise DomainError("matrix does not preserve the Lorentz form")
    if g[0, 0] <= 0 or np.linalg.det(g) <= 0:
        raise DomainError("matrix is not in the identity component")
    return g


def lorentz_inverse(g) -> np.ndarray:
    E = eta(g.shape[0])
    return E @ g.T @ E


def killing_B(X, Y) -> float:
    """B(X, Y) = tr(XY) / 2, a multiple of the Killing form."""
    X = check_algebra(X)
    Y = check_algebra(Y)
    if X.shape != Y.shape:
        raise DimensionError(f"shape mismatch: {X.shape} vs {Y.shape}")
    return 0.5 * float(np.einsum("ij,ji->", X, Y))


def bracket(X, Y) -> np.ndarray:
    return X @ Y - Y @ X


def Ad(g, X) -> np.ndarray:
    return g @ X @ lorentz_inverse(g)


def x_h(x) -> np.ndarray:
    """Horizontal element: infinitesimal boost of e0 towards e2..e_{n+1}."""
    x = np.asarray(x, dtype=float)
    n = x.shape[0]
    X = np.zeros((n + 2, n + 2))
    X[0, 2:] = x
    X[2:, 0] = x
    return X


def y_v(y) -> np.ndarray:
    """Vertical element: infinitesimal rotation of e1 towards e2..e_{n+1}."""
    y = np.asarray(y, dtype=float)
    n = y.shape[0]
    Y = np.zeros((n + 2, n + 2))
    Y[1, 2:] = y
    Y[2:, 1] = -y
    return Y


def h_element(x, y) -> np.ndarray:
    return x_h(x) + y_v(y)


def Z(n: int) -> np.ndarray:
    """Generator of the boost along the base geodesic, diag(R, 0_n)."""
    M = np.zeros((n + 2, n + 2))
    M[0, 1] = M[1, 0] = 1.0
    return M


def go_element(t: float, A) -> np.ndarray:
    """diag(t R, A) with A antisymmetric n x n."""
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    M = t * Z(n)
    M[2:, 2:] = A
    return M


@dataclass(frozen=True)
class HSplit:
    go_part: np.ndarray
    h_part: np.ndarray
    x: np.ndarray
    y: np.ndarray


def algebra_split(X) -> HSplit:
    X = check_algebra(X)
    x = X[0, 2:].copy()
    y = X[1, 2:].copy()
    h = h_element(x, y)
    return HSplit(go_part=X - h, h_part=h, x=x, y=y)


def h_coords(X) -> tuple[np.ndarray, np.ndarray]:
    s = algebra_split(X)
    return s.x, s.y


def mat_exp(X, t: float = 1.0) -> np.ndarray:
    X = check_algebra(X)
    size = float(np.linalg.norm(X, 2)) * abs(t)
    if size > T_MAX:
        raise RangeError(f"|X| |t| = {size:.3g} exceeds the guard {T_MAX}")
    if t == 0:
        return np.eye(X.shape[0])
    return expm(t * X)


def adZ_flow(t: float, x, y) -> tuple[np.ndarray, np.ndarray]:
    """(x, y) coordinates of Ad(exp(tZ))(x_h + y_v)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    c, s = np.cosh(t), np.sinh(t)
    return c * x + s * y, s * x + c * y


def orthogonalizing_time(x, y) -> float:
    """Time s with <x^s, y^s> = 0 under :func:`adZ_flow`.

    Requires |x|^2 + |y|^2 > 2 |<x, y>|, i.e. (x, y) off the null cones.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    num = -2.0 * float(x @ y)
    den = float(x @ x + y @ y)
    if den == 0 or abs(num) >= den:
        raise DomainError("no orthogonalizing time: (x, y) lies on the null cone")
    return 0.5 * np.arctanh(num / den)


def lorentz_frame(p, u, tol: float = 1e-8) -> np.ndarray:
    """Element g of G with g e0 = p and g e1 = u.

    The remaining columns come from Gram-Schmidt over e0, e1, ... in index
    order (two passes), skipping candidates whose residual is below ``tol``.
    """
    p = np.asarray(p, dtype=float)
    u = np.asarray(u, dtype=float)
    dim = p.shape[0]
    if u.shape != p.shape:
        raise DimensionError("point and tangent have different lengths")
    scale = _scale(p, u)
    if abs(inner(p, p) + 1) > 1e-9 * scale**2 or p[0] <= 0:
        raise DomainError("base is not on the hyperboloid")
    if abs(inner(u, u) - 1) > 1e-9 * scale**2 or abs(inner(p, u)) > 1e-9 * scale**2:
        raise DomainError("direction is not a unit tangent at the base")

    cols = [p, u]
    signs = [-1.0, 1.0]
    for k in range(dim):
        if len(cols) == dim:
            break
        w = basis(dim, k)
        for _ in range(2):
            for f, s in zip(cols, signs):
                w = w - s * inner(w, f) * f
        nn = inner(w, w)
        if nn <= tol**2:
            continue
        cols.append(w / np.sqrt(nn))
        signs.append(1.0)
    if len(cols) != dim:
        raise DomainError("could not complete the Lorentz frame")
    g = np.column_stack(cols)
    if np.linalg.det(g) < 0:
        g[:, -1] *= -1.0
    return g
