import json

import numpy as np
import pytest

from hyperlines import verify
from hyperlines.errors import FeatureError
from hyperlines.minkowski import h_element


@pytest.mark.parametrize("n", [1, 2, 3, 6])
def test_algebra_suite_passes(n):
    rep = verify.run("algebra", n)
    assert rep.passed, [c.name for c in rep.checks if not c.passed]


@pytest.mark.parametrize("suite,n", [("kahler", 3), ("octonion", 2), ("desitter", 2)])
def test_fixed_dimension_suites_reject_other_n(suite, n):
    with pytest.raises(FeatureError):
        verify.run(suite, n)


def test_unknown_suite():
    with pytest.raises(KeyError):
        verify.run("nope")


def test_report_structure_and_determinism():
    a = verify.run("charts", 2, seed=11).to_dict(timing=False)
    b = verify.run("charts", 2, seed=11).to_dict(timing=False)
    assert json.dumps(a) == json.dumps(b)
    assert a["status"] == "pass" and a["config"]["seed"] == 11
    names = [c["name"] for c in a["checks"]]
    assert names == sorted(names)
    for c in a["checks"]:
        assert set(c) == {"name", "value", "tolerance", "relation", "status"}
    timed = verify.run("charts", 2, seed=11).to_dict()
    assert "timestamp" in timed and all("runtime_ms" in c for c in timed["checks"])


def test_seed_changes_samples():
    a = verify.run("charts", 2, seed=1).to_dict(timing=False)
    b = verify.run("charts", 2, seed=2).to_dict(timing=False)
    assert [c["value"] for c in a["checks"]] != [c["value"] for c in b["checks"]]


def test_suite_streams_are_independent():
    a = verify.suite_rng(7, "charts", 2).normal(size=3)
    b = verify.suite_rng(7, "metrics", 2).normal(size=3)
    c = verify.suite_rng(7, "charts", 3).normal(size=3)
    assert not np.allclose(a, b) and not np.allclose(a, c)
    assert np.array_equal(a, verify.suite_rng(7, "charts", 2).normal(size=3))


def test_failed_check_is_reported():
    r = verify._Recorder("demo")
    r.measure("too_big", lambda: 2.0, 1.0)
    r.measure("ok", lambda: 0.5, 1.0)
    r.measure("strict", lambda: 1.0, 1.0, ">")
    r.measure("count", lambda: 3, 3, "==")
    assert [c.passed for c in r.checks] == [False, True, False, True]


def test_periodic_closure():
    y = np.array([1.0, 0.0])
    periodic, closure, sep = verify.periodic_closure(h_element(0.5 * y, y))
    assert periodic and closure < 1e-8 and sep > 1e-3
    periodic, closure, sep = verify.periodic_closure(h_element(y, y))
    assert not periodic and sep > 1e-3
