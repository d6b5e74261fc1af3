"""Command-line front end.

Exit status: 0 success, 1 verification failure, 2 usage or parameter error,
3 enumeration cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from .analyze import (
    LinearCode,
    is_equidistant,
    is_projective,
    is_two_weight,
    qt_closure,
    weight_distribution,
)
from .bounds import classify, griesmer_report, table1_csv
from .catalog import catalog, catalog_points, render_csv, render_json
from .errors import BadInput, ParameterError, QTCodesError, TooLarge, VerificationError
from .gf import make_field
from .poly import Polynomial
from .qtconstruct import build_code, interleave_permutation, loads, to_record
from .simplex import build_simplex, simplex_from_explicit_g, simplex_length
from .twistulant import Matrix
from .verify import CHECKS, run_checks


def _emit(args, text: str):
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_construct(args) -> int:
    f = make_field(args.q)
    h = Polynomial.parse(f, args.h_poly) if args.h_poly else None
    base = None
    if args.g_poly:
        m = simplex_length(f.q, args.t)
        lam = f.normalize(args.lam)
        base = simplex_from_explicit_g(f, m, lam, Polynomial.parse(f, args.g_poly))
        if base.t != args.t:
            raise ParameterError(f"g has dimension {base.t}, expected t = {args.t}")
    if args.base_only:
        code = base if base is not None else build_simplex(f, args.t, h)
    else:
        if args.p is None:
            raise ParameterError("--p is required unless --base-only is given")
        code = build_code(f, args.t, args.p, h, base=base)
    rec = to_record(code)
    if args.format == "matrix":
        gen = code.generator() if args.base_only else code.generator
        _emit(args, gen.text() + "\n")
    else:
        _emit(args, json.dumps(rec, sort_keys=True) + "\n")
    return 0


def analyze_record(rec: dict, lc: LinearCode) -> dict:
    f = lc.field
    wd = weight_distribution(lc)
    m, lam = int(rec["m"]), int(rec["lambda"])
    blocks = lc.n // m
    perm = interleave_permutation(m, blocks)
    inter = lc.generator.data.copy()
    inter[:, perm] = lc.generator.data
    report = {
        "n": lc.n,
        "k": lc.k,
        "q": f.q,
        "weight_distribution": {str(w): a for w, a in sorted(wd.counts.items())},
        "min_distance": wd.nonzero_weights[0] if lc.k else None,
        "two_weight": is_two_weight(lc),
        "equidistant": is_equidistant(lc),
        "projective": is_projective(lc) if lc.k else False,
        "qt_closure_block": qt_closure(lc, 1, lam, interleaved=False, block_len=m),
        "qt_closure_interleaved": qt_closure(LinearCode(Matrix(f, inter)), blocks, lam),
        "power_moments": wd.power_moments_hold(),
    }
    if lc.k:
        rep = griesmer_report(lc.n, lc.k, report["min_distance"], f.q)
        report["griesmer"] = {"griesmer_n": rep.griesmer_n, "slack": rep.slack, "meets_bound": rep.meets_bound}
        rec_like = argparse.Namespace(n=lc.n, k=lc.k, d=report["min_distance"], q=f.q, t=rec.get("t"), p=rec.get("p"))
        report["classification"] = classify(rec_like)
    claimed = sorted({rec.get("w1"), rec.get("w2")} - {None})
    report["matches_claim"] = claimed == wd.nonzero_weights if claimed else None
    return report


def cmd_analyze(args) -> int:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.file) as fh:
                text = fh.read()
        except OSError as exc:
            raise ParameterError(str(exc)) from exc
    try:
        rec, lc = loads(text)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParameterError(f"malformed code record: {exc}") from exc
    report = analyze_record(rec, lc)
    if args.format == "json":
        _emit(args, json.dumps(report, sort_keys=True) + "\n")
    else:
        lines = [f"{key}: {_fmt(val)}" for key, val in report.items()]
        _emit(args, "\n".join(lines) + "\n")
    return 0 if report["matches_claim"] in (True, None) else 1


def _fmt(val):
    if isinstance(val, tuple):
        return "(" + ",".join(str(v) for v in val) + ")"
    if isinstance(val, bool):
        return str(val).lower()
    if isinstance(val, dict):
        return json.dumps(val, sort_keys=True)
    return "none" if val is None else str(val)


def cmd_table1(args) -> int:
    _emit(args, table1_csv())
    return 0


def _parse_p_range(values):
    if not values or values == ["ALL"]:
        return None
    if len(values) != 2:
        raise BadInput("--p-range takes LO HI or ALL")
    try:
        return int(values[0]), int(values[1])
    except ValueError:
        raise BadInput(f"bad --p-range {' '.join(values)!r}") from None


def cmd_catalog(args) -> int:
    p_range = _parse_p_range(args.p_range)
    points = catalog_points(args.q, args.t, p_range)
    entries = list(catalog(points))
    text, errors = (render_json if args.format == "json" else render_csv)(entries)
    _emit(args, text)
    for err in errors:
        print(err, file=sys.stderr)
    return 0


def cmd_verify_paper(args) -> int:
    ok = True
    lines = []
    for name, fails in run_checks(args.only, mutate=args.mutate):
        status = "PASS" if not fails else "FAIL"
        ok &= not fails
        lines.append(f"{status} {name}")
        for msg in fails[:10]:
            lines.append(f"    {msg}")
    _emit(args, "\n".join(lines) + "\n")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", metavar="FILE", help="write to FILE instead of standard output")

    parser = argparse.ArgumentParser(prog="qtcodes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a code and print it")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--h-poly", help="primitive polynomial, ascending comma-separated coefficients")
    p.add_argument("--g-poly", help="explicit simplex generator polynomial (replaces --h-poly)")
    p.add_argument("--lam", type=int, default=1, help="shift constant for --g-poly")
    p.add_argument("--base-only", action="store_true", help="emit the simplex base code itself")
    p.add_argument("--format", choices=("json", "matrix"), default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", parents=[common], help="analyze a serialized code")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("table1", parents=[common], help="print the q = t = 3 Griesmer table as CSV")
    p.add_argument("--format", choices=("csv",), default="csv")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("catalog", parents=[common], help="verified records for a parameter grid")
    p.add_argument("--q", type=int, nargs="+")
    p.add_argument("--t", type=int, nargs="+")
    p.add_argument("--p-range", nargs="+", metavar="LO HI | ALL")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify-paper", parents=[common], help="run every reproduction check")
    p.add_argument("--only", action="append", choices=sorted(CHECKS))
    p.add_argument("--mutate", action="store_true", help="inject a one-symbol generator fault")
    p.add_argument("--format", choices=("text",), default="text")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except QTCodesError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
