"""Independent oracles: computed by routes that share no code with the package.

Each oracle uses only numpy, scipy.integrate or sympy, plus hand-written
matrices, so a bug in the library cannot leak into its reference value.
"""
import numpy as np
import sympy as sp
from scipy.integrate import solve_ivp

ETA = lambda k: np.diag([-1.0] + [1.0] * (k - 1))  # noqa: E731


def lorentz(a, b):
    return -a[0] * b[0] + a[1:] @ b[1:]


# -- curvature of the 2-dimensional geodesic space, symbolically ----------------


def curvature_n1_symbolic():
    """Sectional curvature at c_o for n=1 from R(X,Y)Y = -[[X,Y],Y] and B = tr/2.

    so(1,2) is written out by hand; h is spanned by the boost in (e0,e2) and
    the rotation in (e1,e2).
    """
    a, b, c, d = sp.symbols("a b c d", real=True)

    def h(x, y):
        # X[0,2] = X[2,0] = x; X[1,2] = y, X[2,1] = -y
        return sp.Matrix([[0, 0, x], [0, 0, y], [x, -y, 0]])

    X, Y = h(a, b), h(c, d)
    B = lambda P, Q: sp.Rational(1, 2) * (P * Q).trace()  # noqa: E731
    br = lambda P, Q: P * Q - Q * P  # noqa: E731
    R = -br(br(X, Y), Y)
    K = sp.simplify(B(R, X) / (B(X, X) * B(Y, Y) - B(X, Y) ** 2))
    return K


# -- parallel transport along a geodesic, by ODE integration ----------------------


def transport_ode(p, v, w, t):
    """Solve W' = <W, gamma'> gamma along gamma(s) = cosh s p + sinh s v."""

    def rhs(s, W):
        g = np.cosh(s) * p + np.sinh(s) * v
        dg = np.sinh(s) * p + np.cosh(s) * v
        return lorentz(W, dg) * g

    sol = solve_ivp(rhs, (0.0, t), np.asarray(w, dtype=float), rtol=1e-12, atol=1e-13, method="DOP853")
    return sol.y[:, -1]


# -- Jacobi fields as variations ---------------------------------------------------


def _expm_series(X, terms=60):
    out = np.eye(X.shape[0])
    term = np.eye(X.shape[0])
    for k in range(1, terms):
        term = term @ X / k
        out = out + term
    return out


def variation_point(x, y, eps, t):
    """gamma_eps(t) for exp(eps x_h) exp(eps y_v) gamma_o, matrices written by hand."""
    n = len(x)
    k = n + 2
    Xh = np.zeros((k, k))
    Xh[0, 2:] = x
    Xh[2:, 0] = x
    Yv = np.zeros((k, k))
    Yv[1, 2:] = y
    Yv[2:, 1] = -np.asarray(y)
    g = _expm_series(eps * Xh) @ _expm_series(eps * Yv)
    e0, e1 = np.eye(k)[0], np.eye(k)[1]
    return g @ (np.cosh(t) * e0 + np.sinh(t) * e1)


def jacobi_fd(x, y, t, h=1e-4):
    """(J(t), J'(t)) of the variation by central differences in eps (and t for J')."""
    J = lambda s: (variation_point(x, y, h, s) - variation_point(x, y, -h, s)) / (2 * h)  # noqa: E731
    dt = 1e-4
    return J(t), (J(t + dt) - J(t - dt)) / (2 * dt)


# -- ideal endpoints as limits -------------------------------------------------------


def endpoint_limit(p, v, T=20.0):
    """gamma(+-T) / gamma(+-T)_0 - e0, spatial part."""
    out = []
    for s in (-T, T):
        g = np.cosh(s) * np.asarray(p) + np.sinh(s) * np.asarray(v)
        out.append(g[1:] / g[0])
    return out[0], out[1]


# -- Moebius action via limits -------------------------------------------------------


def mobius_limit(g, z, T=20.0):
    """Endpoint of g applied to the ray from e0 towards z."""
    z = np.asarray(z, dtype=float)
    ray = np.cosh(T) * np.eye(len(z) + 1)[0] + np.sinh(T) * np.concatenate([[0.0], z])
    w = g @ ray
    return w[1:] / w[0]


# -- S^6 Nijenhuis tensor, analytic ---------------------------------------------------


def _cross7_table():
    """Cross product on R^7 from the Fano-plane triples of the octonion table
    e1e2=e3, e1e4=e5, e2e4=e6, e3e4=e7 (and e1e6=-e7... derived below by hand).
    """
    # triples (i, j, k) with e_i e_j = e_k, 1-based
    triples = [(1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 4, 7), (1, 7, 6), (2, 5, 7), (3, 6, 5)]
    C = np.zeros((7, 7, 7))
    for i, j, k in triples:
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            C[a - 1, b - 1, c - 1] = 1.0
            C[b - 1, a - 1, c - 1] = -1.0
    return C


CROSS_TABLE = _cross7_table()


def cross_table(u, v):
    return np.einsum("i,j,ijk->k", u, v, CROSS_TABLE)


def nijenhuis_s6(p, X, Y):
    """N(X,Y) for j_p(x) = p x x on S^6, through the Levi-Civita connection.

    (nabla_X j) Y = proj_p(X x Y), and for a torsion-free connection
    N(X,Y) = (nabla_{jX} j)Y - (nabla_{jY} j)X + j (nabla_Y j)X - j (nabla_X j)Y.
    """
    P = lambda w: w - (w @ p) * p  # noqa: E731
    j = lambda w: cross_table(p, w)  # noqa: E731
    D = lambda A, B: P(cross_table(A, B))  # noqa: E731
    return D(j(X), Y) - D(j(Y), X) + j(D(Y, X)) - j(D(X, Y))
