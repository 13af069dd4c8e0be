"""Write the golden curve fixtures and their expected classify outputs.

    python3 scripts/make_fixtures.py [--out fixtures]

Inputs are the named families at n=2 (h = 1e-3, 41 samples centred at t = 0).
Expected outputs come from running the classify command on each input.
"""
import argparse
import io
import json
from contextlib import redirect_stdout
from pathlib import Path

from hyperlines.cli import curve_to_json, main
from hyperlines.families import named_families

GEODESIC_CASES = {
    "geodesic_rotation": {"x": [0.0, 0.0], "y": [1.0, 0.0]},
    "geodesic_mixed": {"x": [0.5, 0.0], "y": [1.0, 0.0]},
    "geodesic_frontier": {"x": [1.0, 0.0], "y": [1.0, 0.0]},
}

CONVERT_CASES = {
    "convert_base_point_dir": {"p": [1.0, 0.0, 0.0, 0.0], "v": [0.0, 1.0, 0.0, 0.0]},
    "convert_pair_e2": {"minus": [0.0, -1.0, 0.0], "plus": [0.0, 1.0, 0.0]},
}


def run_cli(argv) -> dict:
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    assert code == 0, (argv, code)
    return json.loads(buf.getvalue())


def write(path: Path, data):
    path.write_text(json.dumps(data, indent=1) + "\n")


def main_(out: Path):
    out.mkdir(parents=True, exist_ok=True)
    for name, curve in named_families(2).items():
        src = out / f"{name}.json"
        write(src, curve_to_json(curve))
        expected = {m: run_cli(["classify", str(src), "--metric", m]) for m in ("g1", "g0")}
        write(out / f"{name}.expected.json", expected)
    for group, cmd in ((GEODESIC_CASES, "geodesic"), (CONVERT_CASES, "convert")):
        for name, data in group.items():
            src = out / f"{name}.json"
            write(src, data)
            argv = [cmd, str(src)] + (["--steps", "16"] if cmd == "geodesic" else [])
            write(out / f"{name}.expected.json", run_cli(argv))
    print(f"wrote fixtures to {out}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "fixtures")
    main_(ap.parse_args().out)
