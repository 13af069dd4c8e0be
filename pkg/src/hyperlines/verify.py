"""Executable checks: every property block and acceptance criterion as a suite.

Each suite takes (n, rng) and returns a list of Check records. Suites tied to
one dimension (kahler: n=2, octonion: n=6, desitter: n=1) raise FeatureError
for any other n; ``run("all", n, seed)`` runs the general suites at n and the
fixed-dimension suites at their own n.
"""
from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone

import numpy as np

from . import almoststruct as ac
from .boundary import (
    BoundaryTangent,
    d_mobius,
    d_pair_action,
    jacobi_to_boundary,
    mobius_action,
    norm_mss,
    pair_action,
    project_sphere,
    reflection_T,
)
from .config import FRONTIER_BAND, NULL_BAND, VerifyConfig
from .curves import (
    causal_classify_g0,
    causal_classify_g1,
    classify_by_norm,
    presentation_gtangent,
    standard_presentation,
    velocity_boundary,
)
from .errors import FeatureError
from .families import (
    EXPECTED_LABELS,
    jacobi_family,
    named_families,
    random_algebra,
    random_curve,
    random_group,
    random_gtangent,
    random_unit_tangent,
)
from .hyperbolic import (
    UnitTangent,
    geodesic_point,
    ideal_endpoints,
    jacobi_eval,
    parallel_transport,
)
from .linespace import (
    G0,
    G1,
    CausalType,
    GTangent,
    MetricChoice,
    OrientedGeodesic,
    base_geodesic,
    base_tangent,
    causal_from_norm,
    classify_periodic,
    curvature_at_base,
    from_unit_tangent,
    geodesic_in_G,
    gram_at_base,
    gtangent_at_base,
    invariant_forms,
    minitwistor_F,
    minitwistor_F_inv,
    norm,
    norm_g0,
    norm_g1,
    push_forward,
    random_isotropy,
    signature,
    velocity_at_base,
)
from .minkowski import (
    Ad,
    adZ_flow,
    algebra_split,
    bracket,
    go_element,
    h_element,
    inner,
    killing_B,
    lorentz_frame,
    mat_exp,
)

# sectional curvature of (G_2, g1) at c_o, from the symbolic bracket oracle in
# tests/oracles.py, frozen before the numeric suite was written
DE_SITTER_CURVATURE = -1.0

FD_BAND = 1e-4


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    value: float
    tolerance: float
    relation: str
    runtime_ms: float

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        d = asdict(self)
        d.pop("passed")
        d["status"] = self.status
        return d


@dataclass
class VerifyReport:
    suite: str
    config: VerifyConfig
    checks: list[Check] = field(default_factory=list)
    measurements: dict[str, float] = field(default_factory=dict)
    timestamp: str = ""

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self, timing: bool = True) -> dict:
        checks = []
        for c in sorted(self.checks, key=lambda c: c.name):
            d = c.to_dict()
            if not timing:
                d.pop("runtime_ms")
            checks.append(d)
        out = {
            "suite": self.suite,
            "status": "pass" if self.passed else "fail",
            "config": {"n": self.config.n, "seed": self.config.seed, "tolerances": dict(sorted(self.config.tolerances.items()))},
            "checks": checks,
            "measurements": dict(sorted(self.measurements.items())),
        }
        if timing:
            out["timestamp"] = self.timestamp
        return out


class _Recorder:
    """Collects checks; ``measure`` times a callable returning the measured value."""

    def __init__(self, prefix: str):
        self.prefix = prefix
        self.checks: list[Check] = []
        self.measurements: dict[str, float] = {}

    def measure(self, name: str, fn, tol: float, relation: str = "<="):
        t = time.perf_counter()
        value = float(fn())
        ms = (time.perf_counter() - t) * 1e3
        if relation == "<=":
            ok = value <= tol
        elif relation == ">":
            ok = value > tol
        elif relation == "==":
            ok = value == tol
        else:
            raise ValueError(relation)
        self.checks.append(Check(f"{self.prefix}.{name}", bool(ok and math.isfinite(value)), value, tol, relation, ms))

    def report(self, name: str, value: float):
        self.measurements[f"{self.prefix}.{name}"] = float(value)


def _unit(rng, k):
    z = rng.normal(size=k)
    return z / np.linalg.norm(z)


def random_pair(rng, n: int, min_gap: float = 0.05) -> OrientedGeodesic:
    """Random pair of ideal points, rejecting pairs closer than ``min_gap``."""
    while True:
        p, q = _unit(rng, n + 1), _unit(rng, n + 1)
        if np.linalg.norm(p - q) >= min_gap:
            return OrientedGeodesic(p, q)


def random_boundary_tangent(rng, at: OrientedGeodesic) -> BoundaryTangent:
    k = at.minus.shape[0]
    return BoundaryTangent.projected(at, rng.normal(size=k), rng.normal(size=k))


def _rel(err, scale):
    return abs(err) / max(1.0, abs(scale))


# -- suites --------------------------------------------------------------------


def suite_algebra(n: int, rng) -> _Recorder:
    """Lie algebra, hyperbolic geometry and line-space invariants."""
    r = _Recorder("algebra")
    Xs = [random_algebra(rng, n) for _ in range(50)]

    def killing():
        worst = 0.0
        for X, Y, W in zip(Xs, Xs[1:], Xs[2:]):
            s = np.linalg.norm(X) * np.linalg.norm(Y) * (1 + np.linalg.norm(W))
            worst = max(worst, abs(killing_B(X, Y) - killing_B(Y, X)) / s)
            worst = max(worst, abs(killing_B(bracket(W, X), Y) + killing_B(X, bracket(W, Y))) / s)
        return worst

    r.measure("killing_symmetric_ad_invariant", killing, 1e-9)

    def split():
        worst = 0.0
        for X in Xs:
            sp = algebra_split(X)
            again = algebra_split(sp.h_part)
            worst = max(worst, np.max(np.abs(again.go_part)), np.max(np.abs(sp.go_part + sp.h_part - X)))
        return worst

    r.measure("split_projection", split, 1e-12)

    def b_on_h():
        worst = 0.0
        for _ in range(50):
            x, y = rng.normal(size=n), rng.normal(size=n)
            worst = max(worst, _rel(killing_B(h_element(x, y), h_element(x, y)) - (x @ x - y @ y), x @ x + y @ y))
        return worst

    r.measure("killing_on_h_is_x2_minus_y2", b_on_h, 1e-12)

    def adz_law():
        worst = 0.0
        for _ in range(50):
            x, y = rng.normal(size=n), rng.normal(size=n)
            s, t = rng.uniform(-2, 2, size=2)
            a = adZ_flow(s + t, x, y)
            b = adZ_flow(s, *adZ_flow(t, x, y))
            worst = max(worst, np.max(np.abs(a[0] - b[0])), np.max(np.abs(a[1] - b[1])))
        return worst

    r.measure("adZ_group_law", adz_law, 1e-10)

    def exp_law():
        worst = 0.0
        for X in Xs[:20]:
            X = X / np.linalg.norm(X, 2)
            s, t = rng.uniform(-4, 4, size=2)
            d = mat_exp(X, s) @ mat_exp(X, t) - mat_exp(X, s + t)
            worst = max(worst, np.max(np.abs(d)) / np.max(np.abs(mat_exp(X, s + t))))
        return worst

    r.measure("exp_group_law", exp_law, 1e-9)

    def on_hyperboloid():
        # doubles near p0 ~ 1e8 are spaced so that <p, p> moves by O(10) per
        # ulp: the defect is measured relative to p0^2
        worst = 0.0
        for _ in range(20):
            t0 = random_unit_tangent(rng, n)
            for t in np.linspace(-20, 20, 9):
                p = geodesic_point(t0, t).p
                worst = max(worst, abs(inner(p, p) + 1) / p[0] ** 2)
        return worst

    r.measure("geodesic_on_hyperboloid", on_hyperboloid, 1e-9)

    def on_hyperboloid_near():
        worst = 0.0
        for _ in range(20):
            t0 = random_unit_tangent(rng, n)
            for t in np.linspace(-5, 5, 11):
                p = geodesic_point(t0, t).p
                worst = max(worst, abs(inner(p, p) + 1))
        return worst

    r.measure("geodesic_on_hyperboloid_absolute", on_hyperboloid_near, 1e-9)

    def transport_isometry():
        worst = 0.0
        for _ in range(30):
            t0 = random_unit_tangent(rng, n)
            # tangents at t0.p: project random ambient vectors
            w1 = rng.normal(size=n + 2)
            w2 = rng.normal(size=n + 2)
            w1 = w1 + inner(w1, t0.p) * t0.p
            w2 = w2 + inner(w2, t0.p) * t0.p
            t = rng.uniform(-3, 3)
            a, b = parallel_transport(t0, t, w1), parallel_transport(t0, t, w2)
            worst = max(worst, _rel(inner(a, b) - inner(w1, w2), inner(w1, w1) + inner(w2, w2)))
        return worst

    r.measure("transport_isometry", transport_isometry, 1e-10)

    def endpoint_equivariance():
        worst = 0.0
        for _ in range(50):
            t0 = random_unit_tangent(rng, n)
            g = random_group(rng, n)
            m, p = ideal_endpoints(UnitTangent.renormalized(g @ t0.p, g @ t0.v))
            m0, p0 = ideal_endpoints(t0)
            worst = max(worst, np.linalg.norm(m - mobius_action(g, m0)), np.linalg.norm(p - mobius_action(g, p0)))
        return worst

    r.measure("endpoints_equivariant", endpoint_equivariance, 1e-9)

    def slide_invariance():
        worst = 0.0
        for _ in range(50):
            gt = random_gtangent(rng, n)
            t = rng.uniform(-2, 2)
            J0, J1 = jacobi_eval(gt.base, gt.J0, gt.J1, t)
            moved = GTangent(geodesic_point(gt.base, t), J0, J1)
            worst = max(worst, _rel(norm_g1(moved) - norm_g1(gt), gt.scale()))
            if n == 2:
                worst = max(worst, _rel(norm_g0(moved) - norm_g0(gt), gt.scale()))
        return worst

    r.measure("norm_base_point_independent", slide_invariance, 1e-9)

    def reversal():
        worst = 0.0
        for _ in range(50):
            gt = random_gtangent(rng, n)
            rev = GTangent(UnitTangent(gt.base.p, -gt.base.v), gt.J0, -gt.J1)
            worst = max(worst, _rel(norm_g1(rev) - norm_g1(gt), gt.scale()))
        return worst

    r.measure("norm_orientation_reversal", reversal, 1e-12)

    def frontier():
        # x = lam y: g1 norm (lam^2 - 1)|y|^2 -> 0 as |lam| -> 1, and the frontier is null
        worst = 0.0
        for lam in (1 - 1e-6, -1 + 1e-6, 1.0, -1.0):
            y = _unit(rng, n)
            v = norm_g1(velocity_at_base(h_element(lam * y, y)))
            worst = max(worst, abs(v - (lam * lam - 1)))
            if abs(lam) == 1.0:
                worst = max(worst, abs(v))
        return worst

    r.measure("frontier_is_null", frontier, 1e-12)
    return r


def suite_metrics(n: int, rng) -> _Recorder:
    r = _Recorder("metrics")
    cases = [(rng.normal(size=n), rng.normal(size=n)) for _ in range(1000)]

    def g1_closed():
        return max(_rel(norm_g1(gtangent_at_base(x, y)) - (x @ x - y @ y), x @ x + y @ y) for x, y in cases)

    r.measure("g1_closed_form", g1_closed, 1e-12)

    def killing_vs_g1():
        worst = 0.0
        for x, y in cases:
            X = h_element(x, y)
            worst = max(worst, _rel(killing_B(X, X) - norm_g1(velocity_at_base(X)), x @ x + y @ y))
        return worst

    r.measure("killing_matches_g1", killing_vs_g1, 1e-12)

    if n == 2:

        def g0_closed():
            worst = 0.0
            for x, y in cases:
                ix = np.array([-x[1], x[0]])
                worst = max(worst, _rel(norm_g0(gtangent_at_base(x, y)) - ix @ y, x @ x + y @ y))
            return worst

        r.measure("g0_closed_form", g0_closed, 1e-12)

    metrics = [G1]
    if n == 2:
        metrics += [G0] + [MetricChoice("combo", *rng.normal(size=2)) for _ in range(3)]
    samples = [(random_group(rng, n), random_gtangent(rng, n)) for _ in range(200)]
    for m in metrics:

        def invariance(m=m):
            return max(_rel(norm(push_forward(g, gt), m) - norm(gt, m), gt.scale()) for g, gt in samples)

        label = str(m) if m.kind != "combo" else f"combo_{metrics.index(m) - 1}"
        r.measure(f"invariance_{label}", invariance, 1e-8)

    for m in ([G1, G0] if n == 2 else [G1]):
        sig = signature(gram_at_base(m, n))
        r.measure(f"signature_{m}_positive", lambda: sig[0], n, "==")
        r.measure(f"signature_{m}_negative", lambda: sig[1], n, "==")

    dim, _, _ = invariant_forms(n, rng)
    r.measure("invariant_form_dimension", lambda: dim, 2 if n == 2 else 1, "==")
    return r


def _periodic_cases(n: int, rng) -> list[tuple[str, np.ndarray]]:
    cases = []
    for k in range(150):
        lam = rng.uniform(-0.95, 0.95)
        y = _unit(rng, n) * rng.uniform(0.5, 2.0)
        cases.append((f"lam={lam:.3f}", h_element(lam * y, y)))
    frontier = [1.0, -1.0, 1 - 1e-12, -1 + 1e-12, 1 + 1e-12, 1 - 0.5 * FRONTIER_BAND, 1.05, -1.2, 2.0, -3.0]
    for k in range(40):
        lam = frontier[k % len(frontier)]
        y = _unit(rng, n) * rng.uniform(0.5, 2.0)
        cases.append((f"lam={lam!r}", h_element(lam * y, y)))
    for k in range(10):
        x, y = rng.normal(size=n), rng.normal(size=n)
        if n == 1:
            x = np.zeros(1)
            cases.append(("y=0", h_element(y, np.zeros(1))))
        else:
            cases.append(("general", h_element(x, y)))
    return cases


def periodic_closure(X) -> tuple[bool, float, float]:
    """(verdict, closure error at the period or -1, separation before closing).

    Periodic: distance to c_o at the period, and the minimum distance over
    (0.1 P, 0.9 P). Non-periodic: the minimum distance over a window of about
    two would-be periods, kept short enough that the orbit stays finite.
    """
    c0 = base_geodesic(X.shape[0] - 2)
    per = classify_periodic(X)
    nX = np.linalg.norm(X, 2)
    if per.periodic:
        closure = geodesic_in_G(X, per.period).distance_to(c0)
        inside = np.linspace(0.1, 0.9, 81) * per.period
        sep = min(geodesic_in_G(X, s).distance_to(c0) for s in inside)
        return True, closure, sep
    ny = np.linalg.norm(algebra_split(X).y)
    smax = min(4 * np.pi / ny if ny > 0 else np.inf, 10 / nX)
    ss = np.linspace(0.5 / nX, smax, 400)
    sep = min(geodesic_in_G(X, s).distance_to(c0) for s in ss)
    return False, -1.0, sep


def suite_periodic(n: int, rng) -> _Recorder:
    r = _Recorder("periodic")
    cases = _periodic_cases(n, rng)
    results = [(X, periodic_closure(X)) for _, X in cases]
    r.measure("closure_at_period", lambda: max([c for _, (p, c, _) in results if p], default=0.0), 1e-8)
    r.measure("no_early_closure", lambda: min(s for _, (p, _, s) in results if p), 1e-3, ">")
    r.measure("nonperiodic_never_closes", lambda: min(s for _, (p, _, s) in results if not p), 1e-3, ">")
    r.measure("periodic_count", lambda: sum(1 for _, (p, _, _) in results if p), 0, ">")
    r.measure(
        "periodic_velocity_timelike",
        lambda: max(norm_g1(velocity_at_base(X)) for X, (p, _, _) in results if p),
        0.0,
        "<=",
    )
    r.measure(
        "periodic_velocity_norm",
        lambda: max(
            abs(norm_g1(velocity_at_base(X)) - (classify_periodic(X).ratio ** 2 - 1) * np.sum(algebra_split(X).y ** 2))
            for X, (p, _, _) in results
            if p
        ),
        1e-12,
    )
    r.report("cases", len(cases))
    return r


def _presentations(n: int, rng, randoms: int = 50):
    curves = dict(named_families(n))
    for k in range(randoms):
        curves[f"random_{k:02d}"] = random_curve(rng, n)
    return {name: (c, standard_presentation(c, c.size // 2)) for name, c in curves.items()}


def suite_presentation(n: int, rng) -> _Recorder:
    r = _Recorder("presentation")
    sps = _presentations(n, rng)
    r.measure("orthogonality_residual", lambda: max(sp.max_residual() for _, sp in sps.values()), 1e-7)
    _, rel = sps["relifted_rotation"]
    r.measure("relifted_offset_recovered", lambda: np.max(np.abs(rel.f + np.sin(rel.curve.times))), 1e-6)
    for name in ("rotation", "translation"):
        _, sp = sps[name]
        r.measure(f"{name}_offset_zero", lambda sp=sp: np.max(np.abs(sp.f)), 1e-9)
    r.measure("base_point_at_t_o", lambda: max(np.max(np.abs(sp.beta[sp.index_o] - c.P[sp.index_o])) for c, sp in sps.values()), 1e-12)
    return r


def causal_sweep(c, sp, n: int) -> dict:
    """Counts of disagreements between the classifiers over interior samples."""
    geos = c.geodesics()
    out = {"samples": 0, "rate_vs_norm": 0, "boundary_vs_norm": 0, "g0_orientation_vs_norm": 0, "fd_gap": 0.0, "labels_g1": [], "labels_g0": []}
    for i in range(1, c.size - 1):
        rate = causal_classify_g1(sp, i)
        lab, val = classify_by_norm(sp, i, G1)
        gt = presentation_gtangent(sp, i)
        mss = norm_mss(velocity_boundary(c, i, geos))
        blab = causal_from_norm(mss, gt.scale(), FD_BAND)
        out["samples"] += 1
        out["rate_vs_norm"] += rate != lab
        ok = blab == lab or (blab is CausalType.NULL and abs(val) <= FD_BAND * gt.scale())
        out["boundary_vs_norm"] += not ok
        out["fd_gap"] = max(out["fd_gap"], abs(mss - val) / max(1.0, gt.scale()))
        out["labels_g1"].append(str(rate))
        if n == 2:
            orient = causal_classify_g0(sp, i)
            lab0, _ = classify_by_norm(sp, i, G0)
            out["g0_orientation_vs_norm"] += orient != lab0
            out["labels_g0"].append(str(orient))
    return out


def suite_causal(n: int, rng) -> _Recorder:
    r = _Recorder("causal")
    sps = _presentations(n, rng)
    sweeps = {name: causal_sweep(c, sp, n) for name, (c, sp) in sps.items()}
    r.measure("rate_vs_g1_sign", lambda: sum(s["rate_vs_norm"] for s in sweeps.values()), 0, "==")
    r.measure("boundary_vs_g1_sign", lambda: sum(s["boundary_vs_norm"] for s in sweeps.values()), 0, "==")
    r.measure("boundary_fd_gap", lambda: max(s["fd_gap"] for s in sweeps.values()), FD_BAND)
    if n == 2:
        r.measure("g0_orientation_vs_sign", lambda: sum(s["g0_orientation_vs_norm"] for s in sweeps.values()), 0, "==")

    def fixture_labels():
        bad = 0
        for name in named_families(n):
            e1, e0 = EXPECTED_LABELS[name]
            bad += sum(lab != e1 for lab in sweeps[name]["labels_g1"])
            if n == 2:
                bad += sum(lab != e0 for lab in sweeps[name]["labels_g0"])
        return bad

    r.measure("fixture_labels", fixture_labels, 0, "==")
    r.report("samples", sum(s["samples"] for s in sweeps.values()))
    return r


def suite_boundary(n: int, rng) -> _Recorder:
    r = _Recorder("boundary")

    def isometry():
        worst = 0.0
        for _ in range(500):
            gt = random_gtangent(rng, n)
            worst = max(worst, _rel(norm_mss(jacobi_to_boundary(gt)) - norm_g1(gt), gt.scale()))
        return worst

    r.measure("jacobi_to_boundary_isometry", isometry, 1e-8)

    def closed_form_vs_fd():
        worst = 0.0
        for _ in range(20):
            x, y = rng.normal(size=n), rng.normal(size=n)
            c = jacobi_family(x, y)
            bt = velocity_boundary(c, c.size // 2)
            xs, ys = np.concatenate([[0.0], x]), np.concatenate([[0.0], y])
            worst = max(worst, np.max(np.abs(bt.xi_minus - (xs - ys))), np.max(np.abs(bt.xi_plus - (xs + ys))))
        return worst

    r.measure("closed_form_matches_fd", closed_form_vs_fd, 1e-5)

    def dmobius_fd():
        worst = 0.0
        h = 1e-6
        for _ in range(100):
            g = random_group(rng, n)
            z = _unit(rng, n + 1)
            xi = project_sphere(z, rng.normal(size=n + 1))
            zp = (z + h * xi) / np.linalg.norm(z + h * xi)
            zm = (z - h * xi) / np.linalg.norm(z - h * xi)
            fd = (mobius_action(g, zp) - mobius_action(g, zm)) / (2 * h)
            worst = max(worst, np.max(np.abs(fd - d_mobius(g, z, xi))) / max(1.0, np.max(np.abs(fd))))
        return worst

    r.measure("d_mobius_matches_fd", dmobius_fd, 1e-7)

    def mss_invariance():
        worst = 0.0
        for _ in range(200):
            g = random_group(rng, n)
            bt = random_boundary_tangent(rng, random_pair(rng, n))
            v = norm_mss(bt)
            scale = 4 * np.linalg.norm(bt.xi_minus) * np.linalg.norm(bt.xi_plus) / np.sum((bt.at.plus - bt.at.minus) ** 2)
            worst = max(worst, abs(norm_mss(d_pair_action(g, bt)) - v) / max(scale, 1e-300))
        return worst

    r.measure("mss_invariance", mss_invariance, 1e-8)

    def group_law():
        worst = 0.0
        for _ in range(50):
            g, k = random_group(rng, n), random_group(rng, n)
            z = _unit(rng, n + 1)
            worst = max(worst, np.max(np.abs(mobius_action(g, mobius_action(k, z)) - mobius_action(g @ k, z))))
        return worst

    r.measure("mobius_group_law", group_law, 1e-10)

    def psi_equivariance():
        worst = 0.0
        for _ in range(50):
            t0 = random_unit_tangent(rng, n)
            g = random_group(rng, n)
            a = from_unit_tangent(UnitTangent.renormalized(g @ t0.p, g @ t0.v))
            b = pair_action(g, from_unit_tangent(t0))
            worst = max(worst, a.distance_to(b))
        return worst

    r.measure("psi_equivariant", psi_equivariance, 1e-9)

    def reflection_conjugation():
        worst = 0.0
        for _ in range(50):
            Q, _ = np.linalg.qr(rng.normal(size=(n + 1, n + 1)))
            at = random_pair(rng, n)
            x = rng.normal(size=n + 1)
            lhs = reflection_T(Q @ at.minus, Q @ at.plus, Q @ x)
            worst = max(worst, np.max(np.abs(lhs - Q @ reflection_T(at.minus, at.plus, x))))
        return worst

    r.measure("reflection_conjugation", reflection_conjugation, 1e-12)

    def antipodal_form():
        # at (-u, u) with xi_- = lam_- u + x_-, xi_+ = lam_+ u + x_+ ... tangency forces lam = 0
        worst = 0.0
        for _ in range(50):
            u = _unit(rng, n + 1)
            at = OrientedGeodesic(-u, u)
            bt = random_boundary_tangent(rng, at)
            worst = max(worst, abs(norm_mss(bt) - bt.xi_minus @ bt.xi_plus))
        return worst

    r.measure("mss_at_antipodal_pair", antipodal_form, 1e-12)
    return r


def suite_kahler(n: int, rng) -> _Recorder:
    if n != 2:
        raise FeatureError(f"the kahler suite needs n=2, got n={n}")
    r = _Recorder("kahler")
    cases = []
    for _ in range(20):
        X = h_element(rng.normal(size=2), rng.normal(size=2))
        gt0 = gtangent_at_base(rng.normal(size=2), rng.normal(size=2))
        cases.append((X, gt0, rng.uniform(0.1, 2.0)))
    r.measure("parallel_deviation", lambda: max(ac.kahler_parallel_check(X, gt, T) for X, gt, T in cases), 1e-9)
    r.measure(
        "negative_control_deviation",
        lambda: min(ac.kahler_parallel_check(X, gt, 2.0, structure=ac.skewed_structure) for X, gt, _ in cases),
        1e-3,
        ">",
    )
    tangents = [random_gtangent(rng, 2) for _ in range(200)]

    def orthogonal(normf):
        return max(_rel(normf(ac.j0_G3(gt)) - normf(gt), gt.scale()) for gt in tangents)

    r.measure("j0_orthogonal_g1", lambda: orthogonal(norm_g1), 1e-12)
    r.measure("j0_orthogonal_g0", lambda: orthogonal(norm_g0), 1e-12)

    def square():
        worst = 0.0
        for gt in tangents:
            jj = ac.j0_G3(ac.j0_G3(gt))
            worst = max(worst, np.max(np.abs(jj.J0 + gt.J0)), np.max(np.abs(jj.J1 + gt.J1)))
        return worst

    r.measure("j0_squares_to_minus_id", square, 1e-12)

    def frame_independence():
        worst = 0.0
        for gt in tangents[:50]:
            f = lorentz_frame(gt.base.p, gt.base.v)
            # a second frame with the same first two columns: rotate the complement
            f2 = f @ mat_exp(go_element(0.0, np.array([[0.0, -1.0], [1.0, 0.0]]) * rng.uniform(-3, 3)))
            a, b = ac.j0_G3(gt, f), ac.j0_G3(gt, f2)
            worst = max(worst, np.max(np.abs(a.J0 - b.J0)), np.max(np.abs(a.J1 - b.J1)))
        return worst

    r.measure("j0_frame_independent", frame_independence, 1e-9)
    return r


def suite_octonion(n: int, rng) -> _Recorder:
    if n != 6:
        raise FeatureError(f"the octonion suite needs n=6, got n={n}")
    r = _Recorder("octonion")
    pairs = [(rng.normal(size=8), rng.normal(size=8)) for _ in range(200)]
    r.measure(
        "normed_algebra",
        lambda: max(abs(np.linalg.norm(ac.oct_mul(a, b)) - np.linalg.norm(a) * np.linalg.norm(b)) / (np.linalg.norm(a) * np.linalg.norm(b)) for a, b in pairs),
        1e-12,
    )
    r.measure(
        "alternative_laws",
        lambda: max(
            max(
                np.max(np.abs(ac.oct_mul(a, ac.oct_mul(a, b)) - ac.oct_mul(ac.oct_mul(a, a), b))),
                np.max(np.abs(ac.oct_mul(ac.oct_mul(a, b), b) - ac.oct_mul(a, ac.oct_mul(b, b)))),
            )
            / (np.linalg.norm(a) * np.linalg.norm(b)) ** 1.5
            for a, b in pairs
        ),
        1e-11,
    )

    def cross_identity():
        worst = 0.0
        for a, b in pairs:
            u, v = a[1:], b[1:]
            c = ac.cross7(u, v)
            lhs = c @ c
            rhs = (u @ u) * (v @ v) - (u @ v) ** 2
            worst = max(worst, abs(lhs - rhs) / ((u @ u) * (v @ v)), abs(c @ u) / (u @ u * np.linalg.norm(v)))
        return worst

    r.measure("cross_norm_identity", cross_identity, 1e-12)

    bts = [random_boundary_tangent(rng, random_pair(rng, 6)) for _ in range(500)]

    def square():
        return max(np.max(np.abs((ac.big_J(ac.big_J(bt)) + bt).as_vector())) / np.linalg.norm(bt.as_vector()) for bt in bts)

    r.measure("J_squares_to_minus_id", square, 1e-10)

    def orthogonal():
        worst = 0.0
        for bt in bts:
            scale = 4 * np.linalg.norm(bt.xi_minus) * np.linalg.norm(bt.xi_plus) / np.sum((bt.at.plus - bt.at.minus) ** 2)
            worst = max(worst, abs(norm_mss(ac.big_J(bt)) - norm_mss(bt)) / scale)
        return worst

    r.measure("J_mss_orthogonal", orthogonal, 1e-10)

    results = []
    for _ in range(10):
        at = random_pair(rng, 6, min_gap=0.3)
        best = None
        for _ in range(3):
            res = ac.nijenhuis(at, random_boundary_tangent(rng, at), random_boundary_tangent(rng, at))
            if res.fd_change <= 1e-3 * res.norm and (best is None or res.norm > best.norm):
                best = res
        results.append(best)
    r.measure("nijenhuis_validated_points", lambda: sum(b is not None for b in results), 10, "==")
    r.measure("nijenhuis_min_norm", lambda: min((b.norm for b in results if b is not None), default=0.0), 0.1, ">")

    def antisymmetric():
        at = random_pair(rng, 6, min_gap=0.3)
        xi = random_boundary_tangent(rng, at)
        return ac.nijenhuis(at, xi, xi).norm

    r.measure("nijenhuis_diagonal_vanishes", antisymmetric, 1e-6)
    for b in results:
        if b is not None:
            r.report("nijenhuis_richardson_ratio_first", b.richardson_ratio)
            break

    defects = []
    for bt in bts[:50]:
        defects.append(ac.j_equivariance_defect(random_group(rng, 6), bt))
    r.report("J_equivariance_defect_max", max(defects))
    r.report("J_equivariance_defect_median", float(np.median(defects)))
    return r


def suite_desitter(n: int, rng) -> _Recorder:
    if n != 1:
        raise FeatureError(f"the desitter suite needs n=1, got n={n}")
    r = _Recorder("desitter")
    values = []
    while len(values) < 50:
        X = h_element(rng.normal(size=1), rng.normal(size=1))
        Y = h_element(rng.normal(size=1), rng.normal(size=1))
        k = random_isotropy(rng, 1)
        Q = killing_B(X, X) * killing_B(Y, Y) - killing_B(X, Y) ** 2
        if abs(Q) < 1e-3:
            continue
        values.append(curvature_at_base(Ad(k, X), Ad(k, Y)))
    r.measure("curvature_spread", lambda: max(values) - min(values), 1e-8)
    r.measure("curvature_matches_oracle", lambda: max(abs(v - DE_SITTER_CURVATURE) for v in values), 1e-8)
    r.report("curvature", float(np.mean(values)))
    return r


def suite_charts(n: int, rng) -> _Recorder:
    r = _Recorder("charts")
    geos = [random_pair(rng, n) for _ in range(200)]
    r.measure("psi_after_psi_inv", lambda: max(from_unit_tangent(base_tangent(g)).distance_to(g) for g in geos), 1e-8)

    def psi_inv_after_psi():
        worst = 0.0
        for _ in range(200):
            t0 = random_unit_tangent(rng, n)
            b = base_tangent(from_unit_tangent(t0))
            # same oriented geodesic: slide b to the point of t0
            s = math.asinh(inner(t0.p, b.v))
            back = geodesic_point(b, s)
            worst = max(worst, np.max(np.abs(back.p - t0.p)) / np.max(np.abs(t0.p)), np.max(np.abs(back.v - t0.v)) / np.max(np.abs(t0.p)))
        return worst

    r.measure("psi_inv_after_psi", psi_inv_after_psi, 1e-8)
    r.measure("F_after_F_inv", lambda: max(minitwistor_F(*minitwistor_F_inv(g)).distance_to(g) for g in geos), 1e-8)

    def f_inv_after_f():
        worst = 0.0
        for _ in range(200):
            v = np.concatenate([[0.0], _unit(rng, n + 1)])
            x = np.concatenate([[0.0], rng.normal(size=n + 1)])
            x = x - inner(x, v) * v
            v2, x2 = minitwistor_F_inv(minitwistor_F(v, x))
            worst = max(worst, np.max(np.abs(v2 - v)), np.max(np.abs(x2 - x)) / max(1.0, np.linalg.norm(x)))
        return worst

    r.measure("F_inv_after_F", f_inv_after_f, 1e-8)
    return r


SUITES = {
    "algebra": suite_algebra,
    "metrics": suite_metrics,
    "periodic": suite_periodic,
    "presentation": suite_presentation,
    "causal": suite_causal,
    "boundary": suite_boundary,
    "kahler": suite_kahler,
    "octonion": suite_octonion,
    "desitter": suite_desitter,
    "charts": suite_charts,
}

FIXED_DIMENSION = {"kahler": 2, "octonion": 6, "desitter": 1}


def suite_rng(seed: int, suite: str, n: int) -> np.random.Generator:
    """Independent stream per (seed, suite, n), so suites do not depend on run order."""
    return np.random.default_rng([seed, sorted(SUITES).index(suite), n])


def run(suite: str, n: int = 2, seed: int = 7) -> VerifyReport:
    """Run one suite, or every suite with ``suite='all'``. Unknown names raise KeyError."""
    if suite != "all" and suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(['all', *sorted(SUITES)])}")
    names = sorted(SUITES) if suite == "all" else [suite]
    report = VerifyReport(suite, VerifyConfig(n, seed, {"null_band": NULL_BAND, "frontier_band": FRONTIER_BAND, "fd_band": FD_BAND}))
    for name in names:
        m = FIXED_DIMENSION.get(name, n) if suite == "all" else n
        rec = SUITES[name](m, suite_rng(seed, name, m))
        report.checks.extend(rec.checks)
        report.measurements.update(rec.measurements)
    report.timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return report
