import io
import json
import math
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from hyperlines.cli import EXIT_DOMAIN, EXIT_FAIL, EXIT_OK, EXIT_USAGE, curve_from_json, curve_to_json, main
from hyperlines.families import EXPECTED_LABELS, rotation_family

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    data = json.loads(out.out) if code in (EXIT_OK, EXIT_FAIL) else None
    return code, data, out.err


def close(a, b, tol=1e-9):
    """Structural comparison: strings and ints exact, floats to tol."""
    if isinstance(a, dict):
        return a.keys() == b.keys() and all(close(a[k], b[k], tol) for k in a)
    if isinstance(a, list):
        return len(a) == len(b) and all(close(x, y, tol) for x, y in zip(a, b))
    if isinstance(a, float) or isinstance(b, float):
        return a is not None and b is not None and abs(a - b) <= tol * max(1.0, abs(b))
    return a == b


@pytest.mark.parametrize("name", sorted(EXPECTED_LABELS))
def test_classify_fixtures(capsys, name):
    expected = json.loads((FIXTURES / f"{name}.expected.json").read_text())
    for k, metric in enumerate(("g1", "g0")):
        code, data, _ = run(capsys, ["classify", str(FIXTURES / f"{name}.json"), "--metric", metric])
        assert code == EXIT_OK
        labels = {s["label"] for s in data["samples"]}
        assert labels == {EXPECTED_LABELS[name][k]}
        assert close(data, expected[metric])


@pytest.mark.parametrize("name", ["geodesic_rotation", "geodesic_mixed", "geodesic_frontier"])
def test_geodesic_fixtures(capsys, name):
    expected = json.loads((FIXTURES / f"{name}.expected.json").read_text())
    code, data, _ = run(capsys, ["geodesic", str(FIXTURES / f"{name}.json"), "--steps", "16"])
    assert code == EXIT_OK
    assert close(data, expected)


def test_geodesic_values(capsys):
    code, data, _ = run(capsys, ["geodesic", str(FIXTURES / "geodesic_mixed.json"), "--steps", "16"])
    assert data["periodicity"]["periodic"]
    assert data["periodicity"]["period"] == pytest.approx(2 * math.pi / math.sqrt(0.75))
    first, last = data["samples"][0], data["samples"][-1]
    assert np.allclose(first["minus"], last["minus"], atol=1e-9) and np.allclose(first["plus"], last["plus"], atol=1e-9)
    code, data, _ = run(capsys, ["geodesic", str(FIXTURES / "geodesic_frontier.json")])
    assert not data["periodicity"]["periodic"] and data["velocity_norm_g1"] == 0


@pytest.mark.parametrize("name", ["convert_base_point_dir", "convert_pair_e2"])
def test_convert_fixtures(capsys, name):
    expected = json.loads((FIXTURES / f"{name}.expected.json").read_text())
    code, data, _ = run(capsys, ["convert", str(FIXTURES / f"{name}.json")])
    assert code == EXIT_OK
    assert close(data, expected)
    assert data["roundtrip_error"] < 1e-9


def test_convert_minitwistor(capsys, monkeypatch, tmp_path):
    a = 0.7
    src = json.dumps({"v": [0, 1, 0, 0], "x": [0, 0, a, 0]})
    code, data, _ = run(capsys, ["convert", "--json-out", str(tmp_path / "o.json")], src, monkeypatch)
    assert code == EXIT_OK
    assert np.allclose(data["point_dir"]["p"], [math.cosh(a), 0, math.sinh(a), 0], atol=1e-9)
    assert np.allclose(data["minitwistor"]["x"], [0, 0, a, 0], atol=1e-8)
    assert json.loads((tmp_path / "o.json").read_text()) == data


def test_curve_json_roundtrip():
    c = rotation_family(2)
    d = curve_from_json(json.loads(json.dumps(curve_to_json(c))))
    assert np.array_equal(d.P, c.P) and np.array_equal(d.V, c.V) and d.h == c.h


@pytest.mark.parametrize(
    "argv,stdin,code",
    [
        (["classify"], "{not json", EXIT_USAGE),
        (["classify"], '{"h": 0.001}', EXIT_USAGE),
        (["classify"], '{"h": NaN, "samples": []}', EXIT_USAGE),
        (["geodesic"], '{"x": [1, 0], "y": [1]}', EXIT_USAGE),
        (["geodesic"], '{"x": [0, 0], "y": [0, 0]}', EXIT_DOMAIN),
        (["geodesic", "--n", "3"], '{"x": [1, 0], "y": [0, 1]}', EXIT_USAGE),
        (["convert"], '{"minus": [0, 1, 0], "plus": [0, 1, 0]}', EXIT_DOMAIN),
        (["convert"], '{"p": [1, 0, 0, 0], "v": [0, 2, 0, 0]}', EXIT_DOMAIN),
        (["convert"], '{"v": [0, 1, 0, 0], "x": [0, 1, 0, 0]}', EXIT_DOMAIN),
        (["convert"], '{"minus": [0, 1, 0], "plus": [0, 0, 1, 0]}', EXIT_USAGE),
    ],
)
def test_error_exit_codes(capsys, monkeypatch, argv, stdin, code):
    got, _, err = run(capsys, argv, stdin, monkeypatch)
    assert got == code
    assert err.startswith("error:")


def test_classify_metric_errors(capsys, tmp_path):
    c = rotation_family(3)
    src = tmp_path / "c3.json"
    src.write_text(json.dumps(curve_to_json(c)))
    assert run(capsys, ["classify", str(src), "--metric", "g0"])[0] == EXIT_DOMAIN
    assert run(capsys, ["classify", str(src), "--metric", "combo:1,1"])[0] == EXIT_DOMAIN
    assert run(capsys, ["classify", str(src), "--metric", "g5"])[0] == EXIT_DOMAIN
    code, data, _ = run(capsys, ["classify", str(src)])
    assert code == EXIT_OK and all(s["norm_g0"] is None for s in data["samples"])


def test_classify_combo(capsys):
    code, data, _ = run(capsys, ["classify", str(FIXTURES / "translation.json"), "--metric", "combo:0.5,1"])
    assert code == EXIT_OK and {s["label"] for s in data["samples"]} == {"Spacelike"}


def test_missing_input_file(capsys):
    assert run(capsys, ["classify", "/nonexistent/curve.json"])[0] == EXIT_USAGE


def test_verify_exit_codes(capsys):
    assert run(capsys, ["verify", "nonsense"])[0] == EXIT_USAGE
    assert run(capsys, ["verify", "kahler", "--n", "3"])[0] == EXIT_DOMAIN
    code, data, _ = run(capsys, ["verify", "charts", "--n", "1", "--seed", "3"])
    assert code == EXIT_OK and data["status"] == "pass" and data["config"]["seed"] == 3


def test_verify_deterministic(capsys):
    outs = []
    for _ in range(2):
        main(["verify", "boundary", "--seed", "5", "--no-timing"])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    assert "runtime_ms" not in outs[0] and "timestamp" not in outs[0]


def test_module_entry_point(tmp_path):
    out = tmp_path / "res.json"
    proc = subprocess.run(
        [sys.executable, "-m", "hyperlines", "classify", "--json-out", str(out)],
        input=(FIXTURES / "rotation.json").read_text(),
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert {s["label"] for s in json.loads(out.read_text())["samples"]} == {"Timelike"}
