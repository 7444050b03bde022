"""Command-line front end.

Commands
--------
basis        CSV table of t, H_0..H_n and a unity-residual column
curve        sample a curve to CSV/JSON or draw it (with its control
             polygon) to SVG
decasteljau  full corner-cutting pyramid at one parameter, as JSON
elevate      corner-cutting convergence experiment, CSV (+ SVG frames)
insert       single exponent insertion, new curve as JSON
join         C1-join a new curve onto the end of a serialized one
oracle       cross-route consistency report (max deviations)

Outputs are deterministic: CSV floats carry 17 significant digits, SVG
coordinates 6, and the CSV dialect is RFC 4180 (CRLF).  Exit codes:
0 success, 2 invalid input, 3 numeric singularity.

A JSON config file (--config) may supply any long flag (dashes as
underscores); explicit flags win over the file.
"""

import argparse
import io
import json
import sys

from .arith import SingularityError, as_point, format_number, parse_number
from .curves import (GelfondBezierCurve, c1_join, curve_from_json,
                     curve_to_json)
from .dimelev import (PRESETS, convergence_report, corner_cutting,
                      exponent_source, insert_exponent, preset, sample_curve)
from .gelfond_basis import (basis_values, complete_basis_polynomial,
                            complete_exponents, elementary_basis_polynomial,
                            elementary_exponents, gelfond_basis_dd,
                            gelfond_basis_schur, hook_basis_polynomial,
                            hook_exponents)
from .partitions import ExponentSequence


def _fmt17(x):
    return f"{float(x):.17g}"


def _fmt6(x):
    return f"{float(x):.6g}"


def _parse_numbers(text):
    return [parse_number(tok) for tok in str(text).split(",") if str(tok).strip()]


def _parse_points(spec):
    if isinstance(spec, (list, tuple)):
        return [tuple(parse_number(c) for c in p) for p in spec]
    pts = []
    for chunk in str(spec).split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        coords = tuple(parse_number(tok) for tok in chunk.split(","))
        pts.append(coords if len(coords) > 1 else coords[0])
    return pts


def _load_points(args):
    if getattr(args, "points", None):
        return _parse_points(args.points)
    if getattr(args, "points_file", None):
        with open(args.points_file) as fh:
            return _parse_points(json.load(fh))
    raise ValueError("control points required (--points or --points-file)")


def _interval(args):
    if getattr(args, "interval", None):
        lo, hi = _parse_numbers(args.interval)
        return lo, hi
    return 0, 1


def _write_text(path, text):
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header, rows):
    import csv
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _coords(p):
    return p if isinstance(p, tuple) else (p,)


def _svg_text(polylines, markers=()):
    """polylines: (points, stroke, dash) triples in data coordinates;
    markers: (x, y, radius_px) circles.  Y axis flipped for display."""
    xs = [x for pts, _, _ in polylines for x, _ in pts]
    ys = [y for pts, _, _ in polylines for _, y in pts]
    xs += [m[0] for m in markers]
    ys += [m[1] for m in markers]
    if not xs:
        raise ValueError("nothing to draw")
    lo_x, hi_x = min(xs), max(xs)
    lo_y, hi_y = min(ys), max(ys)
    span = max(hi_x - lo_x, hi_y - lo_y) or 1.0
    pad = 0.05 * span
    lo_x, lo_y = lo_x - pad, lo_y - pad
    span += 2 * pad
    size = 480.0

    def map_pt(x, y):
        return ((x - lo_x) / span * size,
                size - (y - lo_y) / span * size)

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
             f'width="{size:g}" height="{size:g}" '
             f'viewBox="0 0 {size:g} {size:g}">']
    for pts, stroke, dash in polylines:
        mapped = " ".join(
            f"{_fmt6(mx)},{_fmt6(my)}" for mx, my in (map_pt(x, y) for x, y in pts))
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        parts.append(f'<polyline fill="none" stroke="{stroke}" '
                     f'stroke-width="1.5"{dash_attr} points="{mapped}"/>')
    for x, y, radius in markers:
        mx, my = map_pt(x, y)
        parts.append(f'<circle cx="{_fmt6(mx)}" cy="{_fmt6(my)}" '
                     f'r="{_fmt6(radius)}" fill="#d62728"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _curve_svg(curve, samples):
    pts2 = []
    a, b = curve.interval
    for i in range(samples):
        t = float(a) + (float(b) - float(a)) * i / (samples - 1)
        p = _coords(curve.evaluate(t))
        if len(p) != 2:
            raise ValueError("SVG output needs 2-dimensional control points")
        pts2.append((float(p[0]), float(p[1])))
    poly = [tuple(float(c) for c in _coords(p)) for p in curve.points]
    markers = [(x, y, 3.0) for x, y in poly]
    return _svg_text([(pts2, "#1f77b4", None), (poly, "#d62728", "4 3")],
                     markers)


def _exponents_from(args):
    if getattr(args, "preset", None):
        exps, _ = preset(args.preset)
        return exps
    if getattr(args, "exponents", None):
        return ExponentSequence(_parse_numbers(args.exponents))
    raise ValueError("exponents required (--exponents or --preset)")


def _samples(args, default=101):
    n = args.samples if getattr(args, "samples", None) else default
    n = int(n)
    if n < 2:
        raise ValueError("need at least 2 samples")
    return n


def cmd_basis(args):
    samples = _samples(args)
    if getattr(args, "closed_form", None):
        family = args.closed_form
        l, m, n = args.l, args.m, args.n
        if family == "elementary":
            exps = elementary_exponents(l, n)
            polys = [elementary_basis_polynomial(l, n, k) for k in range(n + 1)]
        elif family == "complete":
            exps = complete_exponents(l, n)
            polys = [complete_basis_polynomial(l, n, k) for k in range(n + 1)]
        elif family == "hook":
            exps = hook_exponents(l, m, n)
            polys = [hook_basis_polynomial(l, m, n, k) for k in range(n + 1)]
        else:
            raise ValueError(f"unknown closed form {family!r}")
        values = lambda t: [p(t) for p in polys]
    else:
        exps = _exponents_from(args)
        values = lambda t: list(basis_values(exps, t))
    n = exps.n
    header = ["t"] + [f"H{k}" for k in range(n + 1)] + ["unity_residual"]
    rows = []
    for i in range(samples):
        t = i / (samples - 1)
        vals = values(t)
        rows.append([_fmt17(t)] + [_fmt17(v) for v in vals]
                    + [_fmt17(sum(vals) - 1.0)])
    _write_text(args.output, _csv_text(header, rows))
    return 0


def cmd_curve(args):
    exps = _exponents_from(args)
    curve = GelfondBezierCurve(exps, _load_points(args), _interval(args))
    samples = _samples(args)
    fmt = args.format or "csv"
    if fmt == "svg":
        _write_text(args.output, _curve_svg(curve, samples))
        return 0
    a, b = curve.interval
    ts = [float(a) + (float(b) - float(a)) * i / (samples - 1)
          for i in range(samples)]
    if fmt == "csv":
        dim = len(_coords(curve.points[0]))
        header = ["t"] + [f"x{d}" for d in range(dim)]
        rows = [[_fmt17(t)] + [_fmt17(c) for c in _coords(curve.evaluate(t))]
                for t in ts]
        _write_text(args.output, _csv_text(header, rows))
        return 0
    if fmt == "json":
        data = {
            "curve": json.loads(curve_to_json(curve)),
            "samples": [[_fmt17(t)] + [_fmt17(c) for c in _coords(curve.evaluate(t))]
                        for t in ts],
        }
        _write_text(args.output, json.dumps(data, indent=2) + "\n")
        return 0
    raise ValueError(f"unknown format {fmt!r}")


def cmd_decasteljau(args):
    exps = _exponents_from(args)
    curve = GelfondBezierCurve(exps, _load_points(args), _interval(args))
    if args.t is None:
        raise ValueError("--t required")
    t = parse_number(args.t)
    levels = curve.de_casteljau_levels(t)
    data = {
        "t": format_number(t),
        "levels": [[[format_number(c) for c in _coords(p)] for p in level]
                   for level in levels],
    }
    _write_text(args.output, json.dumps(data, indent=2) + "\n")
    return 0


def cmd_elevate(args):
    if getattr(args, "preset", None):
        exps, source = preset(args.preset)
    else:
        exps = _exponents_from(args)
        rule = args.tail_rule or "classical"
        extra = _parse_numbers(args.extra) if args.extra else ()
        source = exponent_source(rule, extra, first_index=exps.n + 1)
    points = _load_points(args)
    iterations = int(args.iterations if args.iterations is not None else 100)
    if iterations < 0:
        raise ValueError("iterations must be >= 0")
    samples = _samples(args, default=512)
    rows = convergence_report(points, exps, source, iterations, samples)
    header = ["iteration", "polygon_size", "hausdorff", "sup_param_distance"]
    out_rows = [[str(it), str(size), _fmt17(h), _fmt17(s)]
                for it, size, h, s in rows]
    _write_text(args.output, _csv_text(header, out_rows))
    if args.frames_dir:
        import os
        if any(len(_coords(as_point(p))) != 2 for p in points):
            raise ValueError("SVG frames need 2-dimensional points")
        os.makedirs(args.frames_dir, exist_ok=True)
        target = GelfondBezierCurve(exps, points)
        curve_samples = [(float(x), float(y)) for x, y in
                         sample_curve(target, samples)]
        for it, pts, _ in corner_cutting(points, exps, source, iterations):
            poly = [tuple(float(c) for c in _coords(p)) for p in pts]
            svg = _svg_text([(curve_samples, "#1f77b4", None),
                             (poly, "#d62728", "4 3")])
            with open(f"{args.frames_dir}/frame_{it:03d}.svg", "w") as fh:
                fh.write(svg)
    return 0


def cmd_insert(args):
    exps = _exponents_from(args)
    points = _load_points(args)
    if args.rho is None:
        raise ValueError("--rho required")
    rho = parse_number(args.rho)
    new_pts, new_exps = insert_exponent(points, exps, rho)
    curve = GelfondBezierCurve(new_exps, new_pts, _interval(args))
    _write_text(args.output, curve_to_json(curve) + "\n")
    return 0


def cmd_join(args):
    if not args.left:
        raise ValueError("--left curve file required")
    with open(args.left) as fh:
        left = curve_from_json(fh.read())
    exps = _exponents_from(args)
    if not getattr(args, "interval", None):
        raise ValueError("--interval b,c required for the right segment")
    lo, hi = _parse_numbers(args.interval)
    free = _parse_points(args.points) if args.points else ()
    right = c1_join(left, exps, (lo, hi), free)
    _write_text(args.output, curve_to_json(right) + "\n")
    return 0


def cmd_oracle(args):
    """Cross-route comparisons on a deterministic grid; prints max
    deviations so independent implementations of the same quantities can
    be eyeballed in one run."""
    exps = _exponents_from(args)
    samples = _samples(args, default=33)
    n = exps.n
    import random
    rng = random.Random(int(args.seed or 0))
    pts = [(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(n + 1)]
    curve = GelfondBezierCurve(exps, pts)
    dev_routes = 0.0
    dev_unity = 0.0
    dev_dc = 0.0
    for i in range(samples):
        t = i / (samples - 1)
        vals = basis_values(exps, t)
        dev_unity = max(dev_unity, abs(sum(vals) - 1.0))
        if 0 < t:
            for k in range(n + 1):
                a = gelfond_basis_schur(exps, k, t)
                b = gelfond_basis_dd(exps, k, t)
                dev_routes = max(dev_routes, abs(float(a) - float(b)),
                                 abs(float(a) - float(vals[k])))
        v1 = curve.evaluate(t)
        v2 = curve.evaluate_de_casteljau(t)
        dev_dc = max(dev_dc, max(abs(x - y) for x, y in zip(v1, v2)))
    lines = [
        f"basis routes (schur vs divided-difference vs production): {_fmt17(dev_routes)}",
        f"partition-of-unity residual: {_fmt17(dev_unity)}",
        f"de casteljau vs basis sum: {_fmt17(dev_dc)}",
    ]
    _write_text(args.output, "\n".join(lines) + "\n")
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="gelfond",
        description="Gelfond-Bezier curve toolkit over Muntz spaces")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, points=False):
        p.add_argument("--exponents", help="comma list, e.g. 0,3,4,6,9")
        p.add_argument("--preset", help=f"one of {sorted(PRESETS)}")
        p.add_argument("--samples", type=int)
        p.add_argument("--output", help="file path (default stdout)")
        p.add_argument("--config", help="JSON file supplying flags")
        if points:
            p.add_argument("--points", help='inline points "x,y;x,y;.."')
            p.add_argument("--points-file", dest="points_file")
            p.add_argument("--interval", help='"a,b" (default "0,1")')

    p = sub.add_parser("basis", help="basis value table")
    common(p)
    p.add_argument("--closed-form", dest="closed_form",
                   choices=["elementary", "complete", "hook"])
    p.add_argument("--l", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("curve", help="sample or draw a curve")
    common(p, points=True)
    p.add_argument("--format", choices=["csv", "json", "svg"])
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("decasteljau", help="corner-cutting pyramid as JSON")
    common(p, points=True)
    p.add_argument("--t")
    p.set_defaults(func=cmd_decasteljau)

    p = sub.add_parser("elevate", help="dimension elevation experiment")
    common(p, points=True)
    p.add_argument("--tail-rule", dest="tail_rule",
                   choices=["classical", "linear", "affine", "quadratic"])
    p.add_argument("--extra", help="comma list inserted before the tail rule")
    p.add_argument("--iterations", type=int)
    p.add_argument("--frames-dir", dest="frames_dir")
    p.set_defaults(func=cmd_elevate)

    p = sub.add_parser("insert", help="insert one exponent")
    common(p, points=True)
    p.add_argument("--rho")
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("join", help="C1-join a right segment")
    common(p, points=True)
    p.add_argument("--left", help="serialized left curve (JSON file)")
    p.set_defaults(func=cmd_join)

    p = sub.add_parser("oracle", help="cross-route consistency report")
    common(p)
    p.add_argument("--seed")
    p.set_defaults(func=cmd_oracle)

    return parser


def _apply_config(args):
    if getattr(args, "config", None):
        with open(args.config) as fh:
            data = json.load(fh)
        for key, value in data.items():
            attr = key.replace("-", "_")
            if hasattr(args, attr) and getattr(args, attr) is None:
                setattr(args, attr, value)


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args)
        return args.func(args)
    except (ValueError, NotImplementedError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SingularityError as exc:
        print(f"numeric singularity: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
