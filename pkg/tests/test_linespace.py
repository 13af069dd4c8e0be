import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperlines.errors import DomainError, FeatureError
from hyperlines.families import random_algebra, random_group, random_gtangent
from hyperlines.hyperbolic import UnitTangent, base_unit_tangent, geodesic_point
from hyperlines.linespace import (
    G0,
    G1,
    GTangent,
    MetricChoice,
    OrientedGeodesic,
    base_geodesic,
    base_tangent,
    causal_from_norm,
    CausalType,
    classify_periodic,
    curvature_at_base,
    from_unit_tangent,
    geodesic_in_G,
    gram_at_base,
    gtangent_at_base,
    h_basis,
    invariant_forms,
    minitwistor_F,
    minitwistor_F_inv,
    norm,
    norm_combo,
    norm_g0,
    norm_g1,
    push_forward,
    random_isotropy,
    signature,
    slide,
    velocity_at_base,
)
from hyperlines.minkowski import Ad, Z, basis, h_element, mat_exp, x_h, y_v
from hyperlines.verify import random_pair

from .strategies import dims, seeds


def e(k, n=2):
    return basis(n + 2, k)


def test_from_unit_tangent_examples():
    c = from_unit_tangent(base_unit_tangent(2))
    assert np.allclose(c.minus, [-1, 0, 0]) and np.allclose(c.plus, [1, 0, 0])
    far = geodesic_point(base_unit_tangent(2), 5.0)
    assert from_unit_tangent(far).distance_to(c) < 1e-12
    rev = from_unit_tangent(UnitTangent(e(0), -e(1)))
    assert np.allclose(rev.minus, [1, 0, 0]) and np.allclose(rev.plus, [-1, 0, 0])


def test_base_tangent_examples():
    b = base_tangent(base_geodesic(2))
    assert np.allclose(b.p, e(0)) and np.allclose(b.v, e(1))
    b = base_tangent(OrientedGeodesic(-np.eye(3)[1], np.eye(3)[1]))
    assert np.allclose(b.p, e(0)) and np.allclose(b.v, e(2))


@given(seeds, dims)
def test_base_tangent_roundtrip(seed, n):
    geo = random_pair(np.random.default_rng(seed), n)
    assert from_unit_tangent(base_tangent(geo)).distance_to(geo) < 1e-9


def test_diagonal_pair_rejected():
    z = np.array([0.0, 1.0, 0.0])
    with pytest.raises(DomainError):
        OrientedGeodesic(z, z)
    with pytest.raises(DomainError):
        OrientedGeodesic(z, 2 * z)


def test_minitwistor_examples():
    assert minitwistor_F(e(1), np.zeros(4)).distance_to(base_geodesic(2)) < 1e-15
    a = 0.8
    geo = minitwistor_F(e(1), a * e(2))
    ref = from_unit_tangent(UnitTangent(math.cosh(a) * e(0) + math.sinh(a) * e(2), e(1)))
    assert geo.distance_to(ref) < 1e-12
    v, x = minitwistor_F_inv(base_geodesic(2))
    assert np.allclose(v, e(1)) and np.allclose(x, 0)
    v, x = minitwistor_F_inv(geo)
    assert np.allclose(v, e(1), atol=1e-8) and np.allclose(x, a * e(2), atol=1e-8)
    # geodesic through e0: the foot is e0
    v, x = minitwistor_F_inv(from_unit_tangent(UnitTangent(e(0), e(3))))
    assert np.allclose(x, 0, atol=1e-12) and np.allclose(v, e(3), atol=1e-12)


def test_minitwistor_rejects_non_orthogonal():
    with pytest.raises(DomainError):
        minitwistor_F(e(1), e(1))
    with pytest.raises(DomainError):
        minitwistor_F(2 * e(1), np.zeros(4))


@given(seeds, dims)
def test_minitwistor_roundtrip(seed, n):
    geo = random_pair(np.random.default_rng(seed), n)
    v, x = minitwistor_F_inv(geo)
    assert minitwistor_F(v, x).distance_to(geo) < 1e-8


def test_minitwistor_injective_on_sample(rng):
    n = 3
    geos = []
    for _ in range(30):
        v = np.concatenate([[0.0], rng.normal(size=n + 1)])
        v /= np.linalg.norm(v)
        x = np.concatenate([[0.0], rng.normal(size=n + 1)])
        x -= (x @ v) * v
        geos.append((v, x, minitwistor_F(v, x)))
    for i in range(len(geos)):
        for j in range(i):
            assert geos[i][2].distance_to(geos[j][2]) > 1e-8


def test_norm_examples():
    assert norm_g1(gtangent_at_base([1, 0], [0, 0])) == 1
    assert norm_g1(gtangent_at_base([0, 0], [1, 0])) == -1
    assert norm_g1(gtangent_at_base([1, 0], [1, 0])) == 0
    assert norm_g0(gtangent_at_base([1, 0], [0, 1])) == pytest.approx(1)
    assert norm_g0(gtangent_at_base([1, 0], [1, 0])) == 0
    assert norm_g0(gtangent_at_base([1, 0], [0, -1])) == pytest.approx(-1)


def test_norm_g0_needs_n2():
    with pytest.raises(FeatureError):
        norm_g0(gtangent_at_base([1, 0, 0], [0, 1, 0]))
    with pytest.raises(FeatureError):
        norm(gtangent_at_base([1, 0, 0], [0, 1, 0]), G0)


@given(seeds, st.floats(-3, 3), st.floats(-3, 3))
def test_combo_linear(seed, lam, mu):
    if lam == 0 and mu == 0:
        return
    gt = random_gtangent(np.random.default_rng(seed), 2)
    assert norm_combo(gt, lam, mu) == pytest.approx(lam * norm_g0(gt) + mu * norm_g1(gt), abs=1e-12 * (1 + gt.scale()))
    assert norm_combo(gt, 0, 1) == norm_g1(gt)
    assert norm_combo(gt, 1, 0) == norm_g0(gt)


def test_metric_choice_parse():
    assert MetricChoice.parse("g1") == G1
    assert MetricChoice.parse("combo:1,2") == MetricChoice("combo", 1.0, 2.0)
    for bad in ("g2", "combo:0,0", "combo:x"):
        with pytest.raises(DomainError):
            MetricChoice.parse(bad)


@given(seeds, dims)
def test_push_forward_preserves_norms(seed, n):
    rng = np.random.default_rng(seed)
    gt = random_gtangent(rng, n)
    g = random_group(rng, n)
    out = push_forward(g, gt)
    scale = max(1.0, out.scale(), gt.scale())
    assert norm_g1(out) == pytest.approx(norm_g1(gt), abs=1e-8 * scale)
    if n == 2:
        assert norm_g0(out) == pytest.approx(norm_g0(gt), abs=1e-8 * scale)


def test_push_forward_identity(rng):
    gt = random_gtangent(rng, 2)
    out = push_forward(np.eye(4), gt)
    assert np.allclose(out.J0, gt.J0) and np.allclose(out.J1, gt.J1) and np.allclose(out.base.p, gt.base.p)


@given(seeds, dims, st.floats(-3, 3))
def test_slide_invariance(seed, n, t):
    gt = random_gtangent(np.random.default_rng(seed), n)
    moved = slide(gt, t)
    scale = max(1.0, moved.scale(), gt.scale())
    assert norm_g1(moved) == pytest.approx(norm_g1(gt), abs=1e-9 * scale)
    if n == 2:
        assert norm_g0(moved) == pytest.approx(norm_g0(gt), abs=1e-9 * scale)


@given(seeds, dims)
def test_orientation_reversal(seed, n):
    gt = random_gtangent(np.random.default_rng(seed), n)
    rev = GTangent(UnitTangent(gt.base.p, -gt.base.v), gt.J0, -gt.J1)
    assert norm_g1(rev) == norm_g1(gt)


def test_causal_from_norm():
    assert causal_from_norm(1e-9, 1.0) is CausalType.NULL
    assert causal_from_norm(1e-3, 1.0) is CausalType.SPACELIKE
    assert causal_from_norm(-1e-3, 1.0) is CausalType.TIMELIKE


def test_velocity_sign():
    # y_v turns e1 towards -y
    gt = velocity_at_base(h_element(np.zeros(2), np.array([1.0, 0.0])))
    assert np.allclose(gt.J1, -e(2))
    h = 1e-6
    g = mat_exp(y_v(np.array([1.0, 0.0])), h)
    assert np.allclose((g @ e(1) - e(1)) / h, -e(2), atol=1e-5)


def test_geodesic_in_G_examples():
    X = x_h(np.array([1.0, 0.0]))
    assert geodesic_in_G(X, 0.0).distance_to(base_geodesic(2)) == 0
    # translation orbit: endpoints of the boosted base geodesic
    s = 0.9
    g = geodesic_in_G(X, s)
    ref = from_unit_tangent(UnitTangent(math.cosh(s) * e(0) + math.sinh(s) * e(2), e(1)))
    assert g.distance_to(ref) < 1e-12
    Y = y_v(np.array([0.6, 0.8]))
    assert geodesic_in_G(Y, 2 * math.pi).distance_to(base_geodesic(2)) < 1e-12
    assert geodesic_in_G(Y, math.pi).distance_to(base_geodesic(2)) > 1.0


def test_geodesic_in_G_rejects_isotropy():
    with pytest.raises(DomainError):
        geodesic_in_G(Z(2), 1.0)


def test_classify_periodic_examples():
    y = np.array([0.6, 0.8])
    p = classify_periodic(h_element(np.zeros(2), y))
    assert p.periodic and p.period == pytest.approx(2 * math.pi)
    p = classify_periodic(h_element(0.5 * y, y))
    assert p.periodic and p.period == pytest.approx(2 * math.pi / math.sqrt(0.75))
    assert not classify_periodic(h_element(y, y)).periodic
    assert not classify_periodic(h_element(-y, y)).periodic
    assert not classify_periodic(h_element(np.array([1.0, 0]), np.array([0, 1.0]))).periodic
    assert not classify_periodic(h_element(y, np.zeros(2))).periodic
    with pytest.raises(DomainError):
        classify_periodic(np.zeros((4, 4)))


@given(seeds, st.floats(-0.95, 0.95))
def test_period_closes_orbit(seed, lam):
    rng = np.random.default_rng(seed)
    y = rng.normal(size=2)
    y /= np.linalg.norm(y)
    X = h_element(lam * y, y)
    per = classify_periodic(X)
    assert per.periodic
    assert geodesic_in_G(X, per.period).distance_to(base_geodesic(2)) < 1e-8
    # periodic velocities are timelike
    assert norm_g1(velocity_at_base(X)) == pytest.approx(lam * lam - 1, abs=1e-12)


def test_frontier_is_null():
    y = np.array([1.0, 0.0])
    for lam in (0.9, 0.99, 0.999999):
        assert abs(norm_g1(velocity_at_base(h_element(lam * y, y)))) == pytest.approx(1 - lam * lam)
    assert norm_g1(velocity_at_base(h_element(y, y))) == 0
    assert norm_g1(velocity_at_base(h_element(-y, y))) == 0


def test_curvature_examples():
    X, Y = h_basis(1)
    assert curvature_at_base(X, Y) == pytest.approx(-1.0, abs=1e-12)
    with pytest.raises(DomainError):
        curvature_at_base(X, 2 * X)


@given(seeds, st.sampled_from([2, 3]))
def test_curvature_isotropy_invariant(seed, n):
    rng = np.random.default_rng(seed)
    X, Y = (h_element(rng.normal(size=n), rng.normal(size=n)) for _ in range(2))
    g = random_isotropy(rng, n)
    try:
        k = curvature_at_base(X, Y)
    except DomainError:
        return
    assert curvature_at_base(Ad(g, X), Ad(g, Y)) == pytest.approx(k, rel=1e-8, abs=1e-8)


@pytest.mark.parametrize("n", [1, 2, 3, 6])
def test_gram_g1(n):
    G = gram_at_base(G1, n)
    assert np.allclose(G, np.diag([1.0] * n + [-1.0] * n))


def test_gram_g0_and_combo():
    G = gram_at_base(G0, 2)
    assert np.allclose(G, G.T)
    assert np.allclose(np.diag(G), 0)
    assert np.allclose(np.sort(np.linalg.eigvalsh(G)), [-0.5, -0.5, 0.5, 0.5])
    assert signature(G) == (2, 2)
    assert signature(gram_at_base(MetricChoice("combo", 1, 1), 2)) == (2, 2)
    with pytest.raises(FeatureError):
        gram_at_base(G0, 3)


@pytest.mark.parametrize("n,dim", [(1, 1), (2, 2), (3, 1), (6, 1)])
def test_invariant_form_dimension(n, dim):
    d, sv, _ = invariant_forms(n, np.random.default_rng(11))
    assert d == dim


def test_velocity_rejects_isotropy_part(rng):
    with pytest.raises(DomainError):
        velocity_at_base(random_algebra(rng, 3))
