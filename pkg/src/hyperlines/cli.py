"""Command line: classify | geodesic | convert | verify.

JSON in (file argument or stdin), JSON out (stdout, and --json-out PATH).
Exit codes: 0 pass, 1 check failure, 2 usage or schema error, 3 domain or
feature error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

import jsonschema
import numpy as np

from .config import NULL_BAND
from .curves import (
    CurveInG,
    causal_classify_g0,
    causal_classify_g1,
    classify_by_norm,
    presentation_gtangent,
    standard_presentation,
)
from .errors import DimensionError, GeometryError
from .hyperbolic import UnitTangent
from .linespace import (
    MetricChoice,
    OrientedGeodesic,
    base_tangent,
    classify_periodic,
    from_unit_tangent,
    geodesic_in_G,
    minitwistor_F,
    minitwistor_F_inv,
    norm_g0,
    norm_g1,
    velocity_at_base,
)
from .minkowski import h_element
from . import verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

_VEC = {"type": "array", "items": {"type": "number"}, "minItems": 2}

CURVE_SCHEMA = {
    "type": "object",
    "required": ["h", "samples"],
    "properties": {
        "h": {"type": "number", "exclusiveMinimum": 0},
        "t0": {"type": "number"},
        "t_o": {"type": "integer", "minimum": 0},
        "p": _VEC,
        "samples": {
            "type": "array",
            "minItems": 5,
            "items": {"type": "object", "required": ["p", "v"], "properties": {"p": _VEC, "v": _VEC}},
        },
    },
}

H_SCHEMA = {"type": "object", "required": ["x", "y"], "properties": {"x": _VEC | {"minItems": 1}, "y": _VEC | {"minItems": 1}}}

CONVERT_SCHEMA = {
    "oneOf": [
        {"type": "object", "required": ["p", "v"], "properties": {"p": _VEC, "v": _VEC}, "not": {"required": ["x"]}},
        {"type": "object", "required": ["minus", "plus"], "properties": {"minus": _VEC, "plus": _VEC}},
        {"type": "object", "required": ["v", "x"], "properties": {"v": _VEC, "x": _VEC}, "not": {"required": ["p"]}},
    ]
}


class UsageError(Exception):
    pass


def _reject_constant(name):
    raise UsageError(f"non-finite number {name} in input")


def load_json(source: str | None, schema: dict):
    try:
        if source in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(source) as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read input: {exc}") from exc
    try:
        data = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc}") from exc
    try:
        jsonschema.validate(data, schema)
    except jsonschema.ValidationError as exc:
        raise UsageError(f"schema error: {exc.message}") from exc
    return data


def _vec(a) -> list[float]:
    return [float(v) for v in np.asarray(a, dtype=float)]


def _check_dimension(args, n: int):
    if args.n is not None and args.n != n:
        raise UsageError(f"--n {args.n} does not match the input dimension n={n}")


def curve_from_json(data: dict) -> CurveInG:
    P = [s["p"] for s in data["samples"]]
    V = [s["v"] for s in data["samples"]]
    if len({len(p) for p in P + V}) != 1:
        raise UsageError("schema error: sample vectors differ in length")
    return CurveInG(float(data["h"]), np.array(P), np.array(V), float(data.get("t0", 0.0)))


def curve_to_json(c: CurveInG) -> dict:
    return {"h": c.h, "t0": c.t0, "samples": [{"p": _vec(p), "v": _vec(v)} for p, v in zip(c.P, c.V)]}


def cmd_classify(args) -> tuple[dict, int]:
    data = load_json(args.input, CURVE_SCHEMA)
    c = curve_from_json(data)
    _check_dimension(args, c.n)
    metric = MetricChoice.parse(args.metric)
    metric.check(c.n)
    index_o = data.get("t_o", c.size // 2)
    sp = standard_presentation(c, index_o, data.get("p"))
    rows = []
    for i in range(1, c.size - 1):
        if metric.kind == "g1":
            label = causal_classify_g1(sp, i, args.band)
        elif metric.kind == "g0":
            label = causal_classify_g0(sp, i, args.band)
        else:
            label, _ = classify_by_norm(sp, i, metric, args.band)
        gt = presentation_gtangent(sp, i)
        rows.append({
            "index": i,
            "t": float(c.times[i]),
            "label": str(label),
            "norm_g1": norm_g1(gt),
            "norm_g0": norm_g0(gt) if c.n == 2 else None,
        })
    out = {
        "n": c.n,
        "metric": str(metric),
        "band": args.band,
        "index_o": index_o,
        "max_residual": sp.max_residual(),
        "samples": rows,
    }
    return out, EXIT_OK


def cmd_geodesic(args) -> tuple[dict, int]:
    data = load_json(args.input, H_SCHEMA)
    x, y = np.asarray(data["x"], dtype=float), np.asarray(data["y"], dtype=float)
    if x.shape != y.shape:
        raise UsageError("schema error: x and y differ in length")
    _check_dimension(args, x.shape[0])
    X = h_element(x, y)
    per = classify_periodic(X)
    if args.s_max is not None:
        s_max = args.s_max
    elif per.periodic:
        s_max = per.period
    else:
        s_max = 2 * math.pi / max(float(np.linalg.norm(X, 2)), 1e-300)
    samples = []
    for s in np.linspace(0.0, s_max, args.steps + 1):
        g = geodesic_in_G(X, float(s))
        samples.append({"s": float(s), "minus": _vec(g.minus), "plus": _vec(g.plus)})
    out = {
        "periodicity": {
            "periodic": per.periodic,
            "period": per.period if per.periodic else None,
            "ratio": per.ratio,
        },
        "velocity_norm_g1": norm_g1(velocity_at_base(X)),
        "s_max": s_max,
        "samples": samples,
    }
    return out, EXIT_OK


def cmd_convert(args) -> tuple[dict, int]:
    data = load_json(args.input, CONVERT_SCHEMA)
    lengths = {len(v) for v in data.values() if isinstance(v, list)}
    if len(lengths) != 1:
        raise UsageError("schema error: vectors differ in length")
    if "minus" in data:
        geo = OrientedGeodesic(np.asarray(data["minus"], dtype=float), np.asarray(data["plus"], dtype=float))
        kind = "pair"
    elif "p" in data:
        geo = from_unit_tangent(UnitTangent(np.asarray(data["p"], dtype=float), np.asarray(data["v"], dtype=float)))
        kind = "point_dir"
    else:
        geo = minitwistor_F(np.asarray(data["v"], dtype=float), np.asarray(data["x"], dtype=float))
        kind = "minitwistor"
    _check_dimension(args, geo.n)
    pd = base_tangent(geo)
    v, x = minitwistor_F_inv(geo)
    err = max(from_unit_tangent(pd).distance_to(geo), minitwistor_F(v, x).distance_to(geo))
    out = {
        "input": kind,
        "pair": {"minus": _vec(geo.minus), "plus": _vec(geo.plus)},
        "point_dir": {"p": _vec(pd.p), "v": _vec(pd.v)},
        "minitwistor": {"v": _vec(v), "x": _vec(x)},
        "roundtrip_error": err,
    }
    return out, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    n = 2 if args.n is None else args.n
    try:
        report = verify.run(args.suite, n, args.seed)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    out = report.to_dict(timing=not args.no_timing)
    return out, EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperlines", description="Geometry of the space of oriented geodesics of H^{n+1}.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("input", nargs="?", default="-", help="JSON input file, '-' or omitted for stdin")
        p.add_argument("--n", type=int, default=None, help="dimension check for the input (verify: suite dimension, default 2)")
        p.add_argument("--json-out", metavar="PATH", help="also write the JSON result to PATH")

    p = sub.add_parser("classify", help="causal type of a curve at each interior sample")
    common(p)
    p.add_argument("--metric", default="g1", help="g1, g0 or combo:lam,mu")
    p.add_argument("--band", type=float, default=NULL_BAND, help="relative null band")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("geodesic", help="sample s -> exp(sX) c_o for X = x_h + y_v and classify periodicity")
    common(p)
    p.add_argument("--s-max", type=float, default=None, help="default: the period, or 2 pi / |X|")
    p.add_argument("--steps", type=int, default=64)
    p.set_defaults(func=cmd_geodesic)

    p = sub.add_parser("convert", help="point-direction, boundary pair and minitwistor forms of a geodesic")
    common(p)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("verify", help="run a verification suite")
    common(p, with_input=False)
    p.add_argument("suite", help="all, " + ", ".join(sorted(verify.SUITES)))
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--no-timing", action="store_true", help="omit runtimes and timestamp (byte-stable output)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "steps", 1) < 1:
        parser.error("--steps must be positive")
    try:
        out, code = args.func(args)
    except (UsageError, DimensionError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GeometryError, ValueError, ArithmeticError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    text = json.dumps(out, indent=2, allow_nan=False)
    print(text)
    if args.json_out:
        with open(args.json_out, "w") as fh:
            fh.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
