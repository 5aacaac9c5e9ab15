"""Command-line surface.

Subcommands: enumerate, weight, paths, verify, special, macdonald,
render.  All I/O is JSON-Lines with the formats of the library types;
rationals are written A/B, never floating point.  Identical invocations
produce byte-identical output.  Exit codes: 0 success, 1 identity
mismatch, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cylindric import (
    InvalidCylindricPartition,
    enumerate_cpps,
    from_json_dict,
    macdonald_weight,
)
from .identities import (
    EvalMode,
    SeriesMode,
    borodin_product,
    counting_series,
    macmahon_check,
    rpp_series,
    stanley_product,
    verify,
)
from .macdonald import MacdonaldOracle
from .partitions import is_horizontal_strip, partitions_upto, size
from .paths import classify_cubes, family_from_json_dict, from_paths, to_paths
from .cylindric import pieri_phi, pieri_psi

DEFAULT_Q = Fraction(2, 7)
DEFAULT_T = Fraction(3, 5)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError("expected a rational A/B: %r" % text) from exc


def _read_jsonl(path):
    stream = sys.stdin if path in (None, "-") else open(path, "r", encoding="utf8")
    try:
        for line in stream:
            line = line.strip()
            if line:
                yield json.loads(line)
    finally:
        if stream is not sys.stdin:
            stream.close()


def _emit(out, obj):
    out.write(json.dumps(obj, separators=(", ", ": ")) + "\n")


def cmd_enumerate(args) -> int:
    out = open(args.jsonl, "w", encoding="utf8") if args.jsonl else sys.stdout
    try:
        for c in enumerate_cpps(args.profile, args.max_weight):
            _emit(out, c.to_json_dict())
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_weight(args) -> int:
    for data in _read_jsonl(args.infile):
        c = from_json_dict(data)
        w = macdonald_weight(c)
        record = w.to_json_dict()
        record["weight"] = c.weight()
        if args.q is not None and args.t is not None:
            record["value"] = str(w.eval_at(args.q, args.t))
        _emit(sys.stdout, record)
    return 0


def cmd_paths(args) -> int:
    for data in _read_jsonl(args.infile):
        if args.to:
            _emit(sys.stdout, to_paths(from_json_dict(data)).to_json_dict())
        else:
            _emit(sys.stdout, from_paths(family_from_json_dict(data)).to_json_dict())
    return 0


def _mode_from_args(args):
    if args.mode == "series":
        return SeriesMode(args.qt_deg)
    return EvalMode(args.q if args.q is not None else DEFAULT_Q,
                    args.t if args.t is not None else DEFAULT_T)


def _z_part(series, exps):
    pad = series.space.cap_start
    return exps[pad:], exps[:pad]


def _coeff_table(series):
    """Map z-exponent block -> human readable (q,t) coefficient."""
    pad = series.space.cap_start
    table = {}
    for exps, val in series.terms():
        z, qt = exps[pad:], exps[:pad]
        bits = table.setdefault(z, [])
        f = Fraction(val)
        if pad:
            mono = "*".join("%s^%d" % (v, e) for v, e in zip(("q", "t"), qt) if e)
            bits.append(("%s*%s" % (f, mono)) if mono else str(f))
        else:
            bits.append(str(f))
    return {z: " + ".join(v) for z, v in table.items()}


def cmd_verify(args) -> int:
    mode = _mode_from_args(args)
    report = verify(args.profile, args.max_weight, mode, refined=args.refined)
    ltab, rtab = _coeff_table(report.lhs), _coeff_table(report.rhs)
    zvars = report.lhs.space.vars[report.lhs.space.cap_start:]
    header = "  ".join(zvars)
    print("profile %s  %s  refined=%s" % (report.profile, report.mode, report.refined))
    print("%-16s | %-40s | %s" % (header, "lhs", "rhs"))
    for z in sorted(set(ltab) | set(rtab), key=lambda e: (sum(e), e)):
        print("%-16s | %-40s | %s" % (" ".join(map(str, z)),
                                      ltab.get(z, "0"), rtab.get(z, "0")))
    if report.passed:
        print("PASS")
        return 0
    e, a, b = report.mismatch
    print("MISMATCH at %s: lhs=%s rhs=%s" % (e, a, b), file=sys.stderr)
    return 1


def cmd_special(args) -> int:
    ok = True
    if args.which == "borodin":
        cs = counting_series(args.profile, args.max_weight)
        bp = borodin_product(args.profile, args.max_weight)
        for n in range(args.max_weight + 1):
            l, r = cs.coefficient((n,)), bp.coefficient((n,))
            print("z^%d  count=%s  product=%s" % (n, l, r))
            ok = ok and l == r
    elif args.which == "stanley":
        mode = EvalMode(Fraction(1, 3), Fraction(1, 3))
        lhs, _ = rpp_series(args.profile, args.max_weight, mode)
        st = stanley_product(args.profile, args.max_weight)
        for n in range(args.max_weight + 1):
            l, r = lhs.coefficient((n,)), st.coefficient((n,))
            print("z^%d  count=%s  product=%s" % (n, l, r))
            ok = ok and l == r
    elif args.which == "okada":
        mode = _mode_from_args(args)
        lhs, rhs = rpp_series(args.profile, args.max_weight, mode)
        mismatch = lhs.first_mismatch(rhs)
        ltab, rtab = _coeff_table(lhs), _coeff_table(rhs)
        for z in sorted(set(ltab) | set(rtab), key=lambda e: (sum(e), e)):
            print("z^%s  lhs=%s  rhs=%s" % (z[0], ltab.get(z, "0"), rtab.get(z, "0")))
        ok = mismatch is None
    else:
        report = macmahon_check(args.a, args.b, args.n)
        print("profile", report["profile"])
        print("coefficients", [str(x) for x in report["coefficients"]])
        print("product     ", report["product"])
        print("direct      ", report["direct"])
        ok = report["pass"]
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_macdonald(args) -> int:
    q = args.q if args.q is not None else DEFAULT_Q
    t = args.t if args.t is not None else DEFAULT_T
    if args.pieri:
        oracle = MacdonaldOracle(q, t, args.max_deg)
        phi, psi = oracle.extract_pieri_coeffs(args.max_deg)
        ok = True
        for lam in partitions_upto(args.max_deg):
            for mu in partitions_upto(size(lam)):
                if not is_horizontal_strip(lam, mu):
                    continue
                pv = pieri_phi(lam, mu).eval_at(q, t)
                sv = pieri_psi(lam, mu).eval_at(q, t)
                same = phi[(lam, mu)] == pv and psi[(lam, mu)] == sv
                ok = ok and same
                print("%r/%r  phi=%s  psi=%s  %s"
                      % (lam, mu, pv, sv, "ok" if same else "DIFFER"))
        print("PASS" if ok else "FAIL")
        return 0 if ok else 1
    oracle = MacdonaldOracle(q, t, args.max_deg + args.order)
    report = oracle.verify_commutation(args.max_deg, args.order)
    for k, (got, ref) in enumerate(zip(report["scalars"], report["reference"])):
        print("S[%d] = %s  (reference %s)" % (k, got, ref))
    print("operator identity:", report["operator_identity"])
    print("PASS" if report["pass"] else "FAIL")
    return 0 if report["pass"] else 1


def cmd_render(args) -> int:
    data = next(iter(_read_jsonl(args.infile)), None)
    if data is None:
        raise InvalidCylindricPartition("no input record to render")
    fam = to_paths(from_json_dict(data)) if "mu" in data else family_from_json_dict(data)
    svg = render_svg(fam, tiles=args.tiles)
    with open(args.svg, "w", encoding="utf8") as fh:
        fh.write(svg)
    print("wrote %s" % args.svg)
    return 0


def render_svg(fam, tiles=False) -> str:
    """Static picture of the family: black/white vertices, up steps red,
    down steps blue, and (optionally) a yellow diamond per white vertex."""
    unit_x, unit_y, margin = 48, 16, 24
    grid = [fam.heights(i) for i in range(len(fam.paths))]
    ymin = min(g[x] for g in grid for x in range(fam.period + 1)) - 2
    ymax = max(g[x] for g in grid for x in range(fam.period + 1)) + 2

    def pt(x, y):
        return (margin + x * unit_x, margin + (ymax - y) * unit_y)

    width = 2 * margin + fam.period * unit_x
    height = 2 * margin + (ymax - ymin) * unit_y
    parts = ['<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
             'viewBox="0 0 %d %d">' % (width, height, width, height)]
    occupied = [set(fam.column_heights(x)) for x in range(fam.period + 1)]
    if tiles:
        for x in range(fam.period + 1):
            for y in range(ymin + (ymin + x) % 2, ymax + 1, 2):
                if y in occupied[x]:
                    continue
                cx, cy = pt(x, y)
                parts.append(
                    '<polygon points="%d,%d %d,%d %d,%d %d,%d" fill="gold" opacity="0.6"/>'
                    % (cx - 12, cy, cx, cy - 8, cx + 12, cy, cx, cy + 8))
    for g in grid:
        for x in range(fam.period):
            x1, y1 = pt(x, g[x])
            x2, y2 = pt(x + 1, g[x + 1])
            color = "crimson" if g[x + 1] > g[x] else "royalblue"
            parts.append('<line x1="%d" y1="%d" x2="%d" y2="%d" stroke="%s" stroke-width="2"/>'
                         % (x1, y1, x2, y2, color))
    for x in range(fam.period + 1):
        for y in range(ymin + (ymin + x) % 2, ymax + 1, 2):
            cx, cy = pt(x, y)
            if y in occupied[x]:
                parts.append('<circle cx="%d" cy="%d" r="4" fill="black"/>' % (cx, cy))
            else:
                parts.append('<circle cx="%d" cy="%d" r="4" fill="white" stroke="black"/>'
                             % (cx, cy))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cylqt", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list cylindric plane partitions up to a weight")
    p.add_argument("--profile", required=True)
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--jsonl", help="write here instead of stdout")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("weight", help="weights of cylindric plane partitions from JSON-Lines")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--q", type=_fraction)
    p.add_argument("--t", type=_fraction)
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("paths", help="convert between sequences and path families")
    direction = p.add_mutually_exclusive_group(required=True)
    direction.add_argument("--to", action="store_true")
    direction.add_argument("--from", dest="from_", action="store_true")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("verify", help="compare both sides of the weighted identity")
    p.add_argument("--profile", required=True)
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--mode", choices=("series", "eval"), default="eval")
    p.add_argument("--refined", action="store_true")
    p.add_argument("--qt-deg", type=int, default=8)
    p.add_argument("--q", type=_fraction)
    p.add_argument("--t", type=_fraction)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("special", help="classical specializations")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--borodin", dest="which", action="store_const", const="borodin")
    which.add_argument("--stanley", dest="which", action="store_const", const="stanley")
    which.add_argument("--okada", dest="which", action="store_const", const="okada")
    which.add_argument("--macmahon", dest="which", action="store_const", const="macmahon")
    p.add_argument("--profile", default="10")
    p.add_argument("--max-weight", type=int, default=6)
    p.add_argument("--mode", choices=("series", "eval"), default="eval")
    p.add_argument("--qt-deg", type=int, default=6)
    p.add_argument("--q", type=_fraction)
    p.add_argument("--t", type=_fraction)
    p.add_argument("--a", type=int, default=5)
    p.add_argument("--b", type=int, default=5)
    p.add_argument("--n", type=int, default=5)
    p.set_defaults(func=cmd_special)

    p = sub.add_parser("macdonald", help="oracle tables and commutation check")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--pieri", action="store_true")
    which.add_argument("--commutation", action="store_true")
    p.add_argument("--max-deg", type=int, default=4)
    p.add_argument("--order", type=int, default=2)
    p.add_argument("--q", type=_fraction)
    p.add_argument("--t", type=_fraction)
    p.set_defaults(func=cmd_macdonald)

    p = sub.add_parser("render", help="draw the lattice-path picture as SVG")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--svg", required=True)
    p.add_argument("--tiles", action="store_true")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidCylindricPartition, ValueError, OSError, json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
