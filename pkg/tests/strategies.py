"""Hypothesis strategies for geometric inputs.

Random group elements and tangents are built from a drawn integer seed via
the package generators, so shrinking works on the seed.
"""
import numpy as np
from hypothesis import strategies as st

from hyperlines import families

dims = st.sampled_from([1, 2, 3, 6])
seeds = st.integers(min_value=0, max_value=2**32 - 1)
reals = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False, allow_infinity=False)


def vectors(k, lo=-3.0, hi=3.0):
    return st.lists(st.floats(min_value=lo, max_value=hi, allow_nan=False), min_size=k, max_size=k).map(np.array)


@st.composite
def unit_tangents(draw, n=None):
    n = draw(dims) if n is None else n
    return families.random_unit_tangent(np.random.default_rng(draw(seeds)), n)


@st.composite
def group_elements(draw, n):
    return families.random_group(np.random.default_rng(draw(seeds)), n)


@st.composite
def gtangents(draw, n=None):
    n = draw(dims) if n is None else n
    return families.random_gtangent(np.random.default_rng(draw(seeds)), n)


@st.composite
def sphere_points(draw, k):
    v = draw(vectors(k))
    if np.linalg.norm(v) < 1e-3:
        v = np.eye(k)[0]
    return v / np.linalg.norm(v)
