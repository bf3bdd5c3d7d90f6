"""Command line front end.

Exit codes: 0 success or pass, 2 usage or parse error, 3 unresolved or failed.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import replace
from typing import Optional, Sequence

from .bijections import parse_bijection, perturb
from .engine import EvalBudget, partials_along, sum_series
from .hyperseq import parse_series
from .notation import OrdinalDepthError, OrdinalSyntaxError, parse
from .ordinal import OMEGA, compare
from .rearrangement import CSV_HEADER, Verdict, rearrange_from_omega, verify_invariance

EXIT_OK, EXIT_USAGE, EXIT_UNRESOLVED = 0, 2, 3


class UsageError(Exception):
    pass


def _short(x: float) -> str:
    mant, exp = f"{x:.1e}".split("e")
    mant = mant.rstrip("0").rstrip(".")
    return f"{mant}e{int(exp)}"


def format_value(x, space) -> str:
    if space.dim == 1:
        return "0" if x == 0 else f"{x:.9f}"
    return "(" + "; ".join(f"{v:.9f}" for v in x) + ")"


def format_outcome(outcome, space, tol: float) -> str:
    if not outcome.converged:
        return f"unresolved at {outcome.reached} ({outcome.reason.value})"
    if outcome.err == 0:
        bound = "0"
    elif outcome.certified and outcome.err <= tol:
        bound = _short(tol)
    else:
        bound = _short(outcome.err)
    tag = "" if outcome.certified else " (heuristic)"
    return f"{format_value(outcome.sum, space)} ± {bound}{tag}"


def _ordinal(text: str):
    try:
        return parse(text)
    except OrdinalSyntaxError as exc:
        caret = " " * exc.position + "^"
        raise UsageError(f"cannot parse ordinal: {exc}\n  {text}\n  {caret}") from None
    except OrdinalDepthError as exc:
        raise UsageError(f"cannot parse ordinal: {exc}") from None


def _series(spec: str):
    try:
        return parse_series(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _budget(args) -> EvalBudget:
    try:
        return EvalBudget(args.tol, args.limit_cap, args.term_cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _arranged(args):
    """The requested series spread over --ordinal through --bijection."""
    h = _series(args.series)
    alpha = _ordinal(args.ordinal)
    if alpha.is_finite:
        raise UsageError(f"--ordinal must be infinite, got {alpha}")
    try:
        e = parse_bijection(args.bijection, alpha)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if alpha == OMEGA and args.bijection == "canonical":
        return h, e
    return rearrange_from_omega(h, e), e


def cmd_ord(args, out) -> int:
    a = _ordinal(args.expr1)
    if args.op == "eval":
        if args.expr2 is not None:
            raise UsageError("eval takes one expression")
        print(a, file=out)
        return EXIT_OK
    if args.expr2 is None:
        raise UsageError(f"{args.op} needs two expressions")
    b = _ordinal(args.expr2)
    if args.op == "cmp":
        print(compare(a, b).value, file=out)
    elif args.op == "add":
        print(a + b, file=out)
    else:
        print(a * b, file=out)
    return EXIT_OK


# values are printed to 9 decimals; evaluate well inside the requested tolerance
# so the printed digits are right, while still reporting the requested bound
DISPLAY_MARGIN = 100


def cmd_sum(args, out) -> int:
    budget = _budget(args)
    g, _ = _arranged(args)
    inner = replace(budget, tol=budget.tol / DISPLAY_MARGIN)
    outcome = sum_series(g, inner, uncertified=args.uncertified)
    print(format_outcome(outcome, g.space, budget.tol), file=out)
    return EXIT_OK if outcome.converged else EXIT_UNRESOLVED


def cmd_partials(args, out) -> int:
    budget = _budget(args)
    g, _ = _arranged(args)
    lam = _ordinal(args.limit)
    if not lam.is_limit:
        raise UsageError(f"--limit must be a limit ordinal, got {lam}")
    if lam > g.domain:
        raise UsageError(f"--limit {lam} exceeds the series domain {g.domain}")
    try:
        rows = partials_along(g, lam, args.count, budget, uncertified=args.uncertified)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNRESOLVED
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["index", "value"])
    for idx, value in rows:
        writer.writerow([str(idx), g.space.format(value)])
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        out.write(buf.getvalue())
    return EXIT_OK


def cmd_verify(args, out) -> int:
    budget = _budget(args)
    h = _series(args.series)
    if h.tail is None and not args.uncertified:
        raise UsageError(f"{args.series} has no certified tail bound; "
                         "pass --uncertified to verify it heuristically")
    alpha = _ordinal(args.ordinal)
    if alpha.is_finite:
        raise UsageError(f"--ordinal must be infinite, got {alpha}")
    try:
        base = parse_bijection(args.bijection, alpha)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.batch is None:
        enums = [base]
    else:
        if args.batch < 1:
            raise UsageError("--batch must be at least 1")
        enums = [perturb(base, args.seed + j, args.window) for j in range(args.batch)]

    reports = [verify_invariance(h, e, budget, uncertified=args.uncertified,
                                 tail_samples=args.tail_checks, seed=args.seed)
               for e in enums]
    if len(reports) == 1 and args.batch is None:
        print(reports[0].to_text(h.space), file=out)
    else:
        for j, r in enumerate(reports):
            disc = "-" if r.discrepancy is None else f"{r.discrepancy:.3e}"
            print(f"run {j}: {r.verdict.value} bijection={r.bijection} discrepancy={disc}", file=out)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            for r in reports:
                writer.writerow(r.csv_row())
    passed = all(r.verdict is Verdict.PASS for r in reports)
    return EXIT_OK if passed else EXIT_UNRESOLVED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wellordered",
                                description="Sums of well-ordered series over countable ordinals.")
    sub = p.add_subparsers(dest="command", required=True)

    o = sub.add_parser("ord", help="ordinal calculator")
    o.add_argument("op", choices=["eval", "cmp", "add", "mul"])
    o.add_argument("expr1")
    o.add_argument("expr2", nargs="?")
    o.set_defaults(func=cmd_ord)

    def common(sp, bijection=True):
        sp.add_argument("series", help="family:name(params) or custom:name")
        sp.add_argument("--ordinal", default="w", help="index ordinal (default w)")
        if bijection:
            sp.add_argument("--bijection", default="canonical",
                            help="canonical | perturb:<seed>:<window>")
        sp.add_argument("--tol", type=float, default=1e-9)
        sp.add_argument("--limit-cap", type=int, default=10**6)
        sp.add_argument("--term-cap", type=int, default=10**7)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--uncertified", action="store_true",
                        help="allow heuristic sums of series without a tail bound")

    s = sub.add_parser("sum", help="sum a series over an ordinal")
    common(s)
    s.set_defaults(func=cmd_sum)

    pa = sub.add_parser("partials", help="partial sums along a fundamental sequence")
    common(pa)
    pa.add_argument("--limit", required=True, help="limit ordinal to approach")
    pa.add_argument("--count", type=int, default=10)
    pa.add_argument("--csv", help="write CSV here instead of stdout")
    pa.set_defaults(func=cmd_partials)

    v = sub.add_parser("verify", help="check that rearranging keeps the sum")
    common(v)
    v.add_argument("--batch", type=int, help="runs with seeds seed..seed+batch-1")
    v.add_argument("--window", type=int, default=64, help="perturbation window for --batch")
    v.add_argument("--tail-checks", type=int, default=0,
                   help="prefixes beta >= beta0 to compare against the full sum")
    v.add_argument("--csv", help="write batch CSV here")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
