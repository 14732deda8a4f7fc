"""Command-line front end.

Exit status: 0 on success, 1 when a computation is rejected, 2 on parse or
validation errors.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from .algebra import GradedClass, TwistPoly, format_graded
from .bundles import chern_classes
from .dsl import evaluate, parse_bundle, parse_variety, pretty
from .errors import ChernIndexError, ParseError, ValidationError
from .hrr import euler_characteristic, todd_of_variety
from .operators import MODES, OperatorSpec, index_polynomial, mode_cotangent
from .variety import CompleteIntersection, integrate

PROG = "chernindex"


# ---------------------------------------------------------------------------
# JSON encoding: exact rationals only, as "p/q" strings


def rational_json(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def poly_json(p: TwistPoly) -> dict:
    return {str(k): rational_json(c) for k, c in enumerate(p.coeffs) if c}


def graded_json(a: GradedClass) -> list:
    return [poly_json(p) for p in a.parts]


def variety_json(X: CompleteIntersection) -> dict:
    return {
        "name": X.name,
        "ambient_dim": X.ambient_dim,
        "multidegrees": list(X.multidegrees),
        "dim": X.dim,
        "degree": X.degree,
    }


def _emit(args, variety, query, result, text_lines):
    if args.json:
        doc = {"variety": variety, "query": query, "result": result}
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _value_text(x: Fraction) -> str:
    return str(Fraction(x))


# ---------------------------------------------------------------------------
# Subcommands


def cmd_chern(args) -> None:
    X = parse_variety(args.variety)
    expr = parse_bundle(args.bundle)
    E = evaluate(expr, X)
    c = chern_classes(E)
    result = {"rank": E.rank, "ch": graded_json(E.ch), "chern_classes": graded_json(c.total())}
    lines = [
        f"variety: {X.name}",
        f"bundle: {pretty(expr)}",
        f"rank: {E.rank}",
        f"ch: {format_graded(E.ch)}",
        f"c: {format_graded(c.total())}",
    ]
    _emit(args, variety_json(X), {"command": "chern", "bundle": pretty(expr)}, result, lines)


def cmd_todd(args) -> None:
    X = parse_variety(args.variety)
    td = todd_of_variety(X)
    total = integrate(X, td)
    result = {"todd": graded_json(td), "integral": rational_json(total.constant)}
    lines = [f"variety: {X.name}", f"Td: {format_graded(td)}", f"integral: {total}"]
    _emit(args, variety_json(X), {"command": "todd"}, result, lines)


def cmd_euler(args) -> None:
    X = parse_variety(args.variety)
    expr = parse_bundle(args.bundle)
    chi = euler_characteristic(X, evaluate(expr, X))
    query = {"command": "euler", "bundle": pretty(expr)}
    result = {"polynomial": poly_json(chi), "text": str(chi)}
    text = str(chi)
    if args.at is not None:
        query["at"] = args.at
        result["value"] = rational_json(chi(args.at))
        text = _value_text(chi(args.at))
    _emit(args, variety_json(X), query, result, [text])


def cmd_index(args) -> None:
    X = parse_variety(args.variety)
    source = parse_bundle(args.source)
    target = parse_bundle(args.target)
    op = OperatorSpec(args.order, source, target)
    poly = index_polynomial(X, op, args.mode)
    query = {
        "command": "index",
        "order": args.order,
        "source": pretty(source),
        "target": pretty(target),
        "mode": args.mode,
    }
    result = {"polynomial": poly_json(poly), "text": str(poly)}
    text = str(poly)
    if args.at is not None:
        query["at"] = args.at
        result["value"] = rational_json(poly(args.at))
        text = _value_text(poly(args.at))
    _emit(args, variety_json(X), query, result, [text])


# Published polynomials, written the way they are printed.
PAPER_EXAMPLES = [
    ("genus-1 curve", "CI(3;2,2)", "4N", TwistPoly((0, 4))),
    ("K3 case deg 6", "CI(4;2,3)", "6N^2 - 60N - 20", TwistPoly((-20, -60, 6))),
    ("K3 case deg 4", "CI(4;2,2)", "4N^2 - 36N + 1", TwistPoly((1, -36, 4))),
]


def paper_report_rows() -> List[dict]:
    rows = []
    for label, variety, printed, printed_poly in PAPER_EXAMPLES:
        X = parse_variety(variety)
        modes = ["default"]
        try:
            mode_cotangent(X, "paper-compat")
            modes = ["paper-compat", "default"]
        except ChernIndexError:
            pass
        for mode in modes:
            computed = index_polynomial(X, OperatorSpec(1, "O(0)", "O(0)"), mode)
            rows.append(
                {
                    "proposition": label,
                    "variety": variety,
                    "mode": mode,
                    "printed": printed,
                    "printed_polynomial": printed_poly,
                    "computed": computed,
                    "verdict": "MATCH" if computed == printed_poly else "MISMATCH",
                }
            )
    return rows


def cmd_report(args) -> None:
    rows = paper_report_rows()
    widths = (16, 11, 14, 18, 20)
    header = ("proposition", "variety", "mode", "printed", "computed", "verdict")

    def line(cells):
        return "".join(c.ljust(w) for c, w in zip(cells, widths)) + cells[-1]

    lines = ["Index of D_u(N): printed vs computed", "", line(header)]
    for r in rows:
        lines.append(
            line((r["proposition"], r["variety"], r["mode"], r["printed"], str(r["computed"]), r["verdict"]))
        )
    lines += ["", "Discrepancies (computed - printed):"]
    for r in rows:
        if r["verdict"] == "MISMATCH":
            diff = r["computed"] - r["printed_polynomial"]
            lines.append(f"  {r['variety']} {r['mode']}: {diff}")
    result = [
        {
            "proposition": r["proposition"],
            "variety": r["variety"],
            "mode": r["mode"],
            "printed": r["printed"],
            "printed_polynomial": poly_json(r["printed_polynomial"]),
            "computed": poly_json(r["computed"]),
            "computed_text": str(r["computed"]),
            "verdict": r["verdict"],
        }
        for r in rows
    ]
    _emit(args, None, {"command": "report", "target": args.target}, result, lines)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Characteristic classes and index polynomials on complete intersections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chern", parents=[common], help="rank, Chern character and Chern classes")
    p.add_argument("--variety", required=True)
    p.add_argument("--bundle", required=True)
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("todd", parents=[common], help="Todd class of the tangent bundle")
    p.add_argument("--variety", required=True)
    p.set_defaults(func=cmd_todd)

    p = sub.add_parser("euler", parents=[common], help="Euler characteristic via Riemann-Roch")
    p.add_argument("--variety", required=True)
    p.add_argument("--bundle", required=True)
    p.add_argument("--at", type=int)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("index", parents=[common], help="index polynomial of a twisted operator")
    p.add_argument("--variety", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--mode", choices=MODES, default="default")
    p.add_argument("--at", type=int)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("report", parents=[common], help="replay the published examples")
    p.add_argument("target", choices=["paper"])
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except ParseError as exc:
        print(f"{PROG}: parse error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"{PROG}: invalid input: {exc}", file=sys.stderr)
        return 2
    except ChernIndexError as exc:
        print(f"{PROG}: rejected: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
