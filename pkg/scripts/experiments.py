"""Numerical tables behind the verification suites.

    python3 scripts/experiments.py [--seed 7]

Prints: invariant form dimensions and Gram spectra, the periodicity sweep
with closure errors, the curvature of the 2-dimensional geodesic space, the
Nijenhuis certificate on pairs in S^6, and the measured G-equivariance
defect of the octonionic structure.
"""
import argparse

import numpy as np

from hyperlines import almoststruct as ac
from hyperlines.errors import RangeError
from hyperlines.families import random_group
from hyperlines.linespace import G0, G1, gram_at_base, h_basis, curvature_at_base, invariant_forms
from hyperlines.minkowski import h_element
from hyperlines.verify import periodic_closure, random_boundary_tangent, random_pair


def forms(rng):
    print("invariant symmetric forms on h")
    for n in (1, 2, 3, 6):
        dim, sv, _ = invariant_forms(n, rng)
        print(f"  n={n}: dimension {dim}, smallest singular values {np.sort(sv)[: dim + 1]}")
    for m in (G1, G0):
        print(f"  Gram eigenvalues {m} (n=2): {np.linalg.eigvalsh(gram_at_base(m, 2))}")


def periodicity(rng):
    print("orbits exp(sX) c_o with x = lam y")
    print(f"  {'lam':>14} {'|y|':>6} {'verdict':>12} {'period':>10} {'closure':>10} {'min sep':>8}")
    for lam in (0.0, 0.5, -0.9, 0.95, 1 - 1e-6, 1 - 1e-12, 1.0, 1.5):
        y = rng.normal(size=2)
        y *= rng.uniform(0.5, 2) / np.linalg.norm(y)
        X = h_element(lam * y, y)
        try:
            periodic, closure, sep = periodic_closure(X)
        except RangeError:
            print(f"  {lam!r:>14} {np.linalg.norm(y):6.3f}     Periodic  period beyond the exp guard |X| s <= 50")
            continue
        period = 2 * np.pi / (np.sqrt(1 - lam**2) * np.linalg.norm(y)) if periodic else float("nan")
        print(f"  {lam!r:>14} {np.linalg.norm(y):6.3f} {'Periodic' if periodic else 'NonPeriodic':>12} {period:10.4f} {closure:10.2e} {sep:8.4f}")


def curvature():
    X, Y = h_basis(1)
    print(f"sectional curvature at c_o, n=1: {curvature_at_base(X, Y):.15f}")


def nijenhuis(rng):
    print("Nijenhuis tensor of J on pairs in S^6 (h = 1e-4, Richardson from h, h/2, h/4)")
    for _ in range(5):
        at = random_pair(rng, 6, min_gap=0.3)
        res = ac.nijenhuis(at, random_boundary_tangent(rng, at), random_boundary_tangent(rng, at))
        print(f"  |N| = {res.norm:9.5f}   |N(h) - N(h/2)| = {res.fd_change:.2e}   ratio = {res.richardson_ratio:.4f}")


def equivariance(rng):
    d = [ac.j_equivariance_defect(random_group(rng, 6), random_boundary_tangent(rng, random_pair(rng, 6))) for _ in range(200)]
    print(f"|dg J - J dg| / |xi| over 200 samples: min {min(d):.3e} median {np.median(d):.3e} max {max(d):.3e}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=7)
    rng = np.random.default_rng(ap.parse_args().seed)
    forms(rng)
    periodicity(rng)
    curvature()
    nijenhuis(rng)
    equivariance(rng)
