"""Command-line interface.

Subcommands: check-ybe, twist, star, poisson, contract, verify-suite, parse.
Exit codes: 0 all pass (flagged entries, being documented paper
discrepancies, do not fail the suite), 1 at least one failing check,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys

from .expressions import ExpressionError, parse_expression, render
from .registry import Registry
from .report import exit_code, render_structured, render_text
from .scalars import TruncationPolicy
from .verify import SECTIONS, VerifyConfig, run_verify_suite

ORDER_AXES = ("kinv", "khinv", "xi", "xibar", "kbar_inv", "khbar_inv")


def _parse_orders(pairs):
    orders = {}
    for pair in pairs or ():
        if "=" not in pair:
            raise SystemExit(2)
        axis, _, value = pair.partition("=")
        if axis not in ORDER_AXES:
            print(f"error: unknown truncation axis {axis!r} "
                  f"(choose from {', '.join(ORDER_AXES)})", file=sys.stderr)
            raise SystemExit(2)
        try:
            orders[axis] = int(value)
        except ValueError:
            print(f"error: --order {pair!r} is not AXIS=N", file=sys.stderr)
            raise SystemExit(2)
    return orders


def _emit(text: str, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _run_sections(args, sections, id_filter=None) -> int:
    config = VerifyConfig(orders=_parse_orders(args.order),
                          only=frozenset(sections))
    reports = run_verify_suite(config)
    if id_filter:
        reports = [r for r in reports if id_filter in r.check_id]
    if args.format == "structured":
        _emit(render_structured(reports), args.out)
    else:
        _emit(render_text(reports, verbose=args.verbose), args.out)
    return exit_code(reports)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="twistkit",
        description="exact symbolic checks for twist-deformed kappa-Poincare "
                    "algebras, kappa-Minkowski star products, the deformed "
                    "Poincare group and its Galilean contractions")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--order", action="append", metavar="PARAM=N",
                       help="override a truncation order (repeatable)")
        p.add_argument("--format", choices=("text", "structured"),
                       default="text")
        p.add_argument("--out", metavar="FILE", help="write the report here")
        p.add_argument("--verbose", action="store_true",
                       help="show residuals for non-passing checks")

    p = sub.add_parser("parse", help="parse an expression and print its "
                                     "normal form")
    p.add_argument("expression")
    p.add_argument("--algebra", default="kappa-poincare",
                   choices=Registry.ALGEBRAS)
    common(p)

    p = sub.add_parser("check-ybe", help="classical/modified Yang-Baxter "
                                         "checks for the registered r-matrices")
    common(p)

    p = sub.add_parser("twist", help="cocycle, twisted coproduct and "
                                     "antipode comparisons")
    p.add_argument("--twist", choices=("F-xi-kappa", "F-hat-kappa"),
                   help="restrict to one twist")
    common(p)

    p = sub.add_parser("star", help="star-product commutator tables")
    common(p)

    p = sub.add_parser("poisson", help="Sklyanin brackets and the quantized "
                                       "group relations")
    common(p)

    p = sub.add_parser("contract", help="nonrelativistic contraction checks")
    common(p)

    p = sub.add_parser("verify-suite", help="run every registered check")
    p.add_argument("--only", metavar="SECTIONS",
                   help="comma-separated subset of: " + ", ".join(SECTIONS))
    common(p)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0

    if args.command == "parse":
        reg = Registry(TruncationPolicy.default(**_parse_orders(args.order)))
        try:
            value = parse_expression(args.expression,
                                     reg.algebra(args.algebra).pres)
        except ExpressionError as exc:
            print(f"parse error: {exc}", file=sys.stderr)
            return 2
        _emit(render(value, args.format), args.out)
        return 0

    if args.command == "check-ybe":
        return _run_sections(args, ("ybe",))
    if args.command == "twist":
        return _run_sections(args, ("twist",), id_filter=args.twist)
    if args.command == "star":
        return _run_sections(args, ("star",))
    if args.command == "poisson":
        return _run_sections(args, ("poisson",))
    if args.command == "contract":
        return _run_sections(args, ("contract",))
    if args.command == "verify-suite":
        sections = SECTIONS
        if args.only:
            wanted = tuple(s.strip() for s in args.only.split(","))
            for s in wanted:
                if s not in SECTIONS:
                    print(f"error: unknown section {s!r}", file=sys.stderr)
                    return 2
            sections = wanted
        return _run_sections(args, sections)
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
