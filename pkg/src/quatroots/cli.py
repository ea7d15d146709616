"""Command line front end.

Exit codes: 0 success, 1 domain error (e.g. constant input), 2 parse or
usage error, 3 a consistency cross-check failed.
"""

from __future__ import annotations

import argparse
import sys

from . import report
from .analysis import (
    DEFAULT_TOL,
    classify,
    comparison_bound,
    components,
    enumerate_integer_roots,
    heights,
    root_bounds,
    solve_quadratic_complex_case,
)
from .bezout import barnett_stack, bezout_matrix, bezoutian, exact_rank, sylvester_resultant
from .errors import ConditionFails, PolySyntaxError, QuatRootsError
from .expr import parse_poly
from .numeric import DEFAULT_MAX_ITERS
from .poly import format_poly

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE, EXIT_CONSISTENCY = 0, 1, 2, 3


def _cmd_classify(Q, args):
    r = classify(Q, tol=args.tol, max_iters=args.max_iters, numeric=not args.no_numeric)
    out = report.report_dict(r) if args.json else report.report_text(r)
    return out, (EXIT_OK if r.ok else EXIT_CONSISTENCY)


def _cmd_quadratic(Q, args):
    try:
        s = solve_quadratic_complex_case(Q)
    except ConditionFails as exc:
        if args.json:
            return {"has_complex_root": False, "reason": str(exc)}, EXIT_OK
        return f"no complex root: {exc}\n", EXIT_OK
    if args.json:
        return {"has_complex_root": True, **report.quadratic_dict(s)}, EXIT_OK
    text = (f"q     = {s.q}\n"
            f"p     = {s.p}\n"
            f"sigma = {s.sigma}\n")
    if s.coincide:
        text += "the two roots coincide\n"
    return text, EXIT_OK


def _cmd_bounds(Q, args):
    h = heights(Q)
    b = root_bounds(Q)
    cmp_bound = comparison_bound(Q)
    if args.json:
        return {"heights": report.heights_dict(h), "bounds": report.bounds_dict(b),
                "comparison_bound": report.approx(cmp_bound)}, EXIT_OK
    text = (f"H(Q) = {h.h_q:.12g}   H1 = {h.h1:.12g}   H2 = {h.h2}\n"
            f"general radius          {b.general:.12g}\n"
            f"isolated complex radius {b.isolated_complex:.12g}\n"
            f"spherical radius        {b.spherical:.12g}\n"
            f"coefficient-sum bound   {cmp_bound:.12g}\n")
    if h.excluded:
        text += f"zero components left out of the minima: {', '.join(h.excluded)}\n"
    return text, EXIT_OK


def _cmd_integer_roots(Q, args):
    roots = enumerate_integer_roots(Q)
    if args.json:
        return {"integer_roots": [report.quaternion(q) for q in roots]}, EXIT_OK
    if not roots:
        return "no integer roots\n", EXIT_OK
    return "".join(f"{q}\n" for q in roots), EXIT_OK


def _cmd_bezout(Q, args):
    c = components(Q)
    bez = bezout_matrix(c.f, c.g)
    stack = barnett_stack(c.f1, [c.f2, c.g1, c.g2])
    res = sylvester_resultant(c.f, c.g) if c.g else None
    det = bezoutian(c.f, c.g)
    r1, r2 = exact_rank(bez), exact_rank(stack)
    if args.json:
        return {
            "f": report.poly(c.f), "g": report.poly(c.g),
            "bez_fg": report.matrix(bez), "rank_bez_fg": r1,
            "barnett_stack": report.matrix(stack), "rank_barnett": r2,
            "bezoutian_fg": report.gaussian(det),
            "resultant_fg": None if res is None else report.gaussian(res),
        }, EXIT_OK
    text = (f"f = {format_poly(c.f)}\ng = {format_poly(c.g)}\n"
            f"Bez(f, g)  rank {r1}\n{bez}\n"
            f"B_f1(f2, g1, g2)  rank {r2}\n{stack}\n"
            f"bez(f, g) = {det}\n"
            f"R(f, g)   = {res if res is not None else 'undefined (g = 0)'}\n")
    return text, EXIT_OK


COMMANDS = {
    "classify": _cmd_classify,
    "quadratic": _cmd_quadratic,
    "bounds": _cmd_bounds,
    "integer-roots": _cmd_integer_roots,
    "bezout": _cmd_bezout,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("expression", nargs="?", help="polynomial in t, e.g. 't^2 - (i+j)*t - k'")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL,
                        help="relative residual tolerance for approximated roots")
    common.add_argument("--max-iters", type=int, default=DEFAULT_MAX_ITERS)
    common.add_argument("--no-numeric", action="store_true",
                        help="exact data only: degrees, ranks, predicates, real roots")
    common.add_argument("--batch", metavar="FILE",
                        help="one expression per line; '#' starts a comment")
    common.add_argument("--out", metavar="FILE", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="quatroots",
                                     description="Root analysis of quaternion polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("classify", parents=[common], help="full root report")
    sub.add_parser("quadratic", parents=[common], help="closed-form roots of a quadratic with a complex root")
    sub.add_parser("bounds", parents=[common], help="heights and root-size bounds")
    sub.add_parser("integer-roots", parents=[common], help="all roots with integer coordinates")
    sub.add_parser("bezout", parents=[common], help="Bezout and Barnett matrices with ranks")
    return parser


def _read_batch(path: str) -> list[str]:
    with open(path, encoding="utf-8") as fh:
        lines = [ln.split("#", 1)[0].strip() for ln in fh]
    return [ln for ln in lines if ln]


def _render(result, as_json: bool) -> str:
    return report.dumps(result) if as_json else result


def _run_one(command: str, text: str, args) -> tuple[object, int]:
    Q = parse_poly(text)
    return COMMANDS[command](Q, args)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.batch is None and args.expression is None:
        parser.error("an expression or --batch FILE is required")
    if args.tol <= 0:
        parser.error("--tol must be positive")

    exprs = _read_batch(args.batch) if args.batch else [args.expression]
    results = []
    code = EXIT_OK
    for text in exprs:
        try:
            result, rc = _run_one(args.command, text, args)
        except PolySyntaxError as exc:
            print(f"parse error: {exc}", file=sys.stderr)
            print(f"  {exc.text}\n  {' ' * exc.pos}^", file=sys.stderr)
            return EXIT_PARSE
        except QuatRootsError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_DOMAIN
        results.append(result)
        code = max(code, rc)

    if args.json:
        payload = results[0] if not args.batch else [
            {"expression": e, "result": r} for e, r in zip(exprs, results)]
        out = report.dumps(payload)
    else:
        out = "".join(results if not args.batch else
                      (f"== {e}\n{r}" for e, r in zip(exprs, results)))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
