"""Command-line front end: ``apconcat {eval,coeffs,verify,fit,bench,digits}``.

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 internal exact-division failure.
"""

from __future__ import annotations

import argparse
import sys
import time

import gmpy2

from .closed_form import (
    CoefficientCache,
    ExactDivisionError,
    coefficients_for_length,
    evaluate,
    evaluate_mod,
)
from .oracle import oracle_eval
from .progression import ArithmeticProgression, Kind, concat_digit_count
from .recurrence import fit_recurrence

# terms longer than this must go to a file
MAX_STDOUT_DIGITS = 10 ** 8

EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


def _int_at_least(low):
    def parse(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if value < low:
            raise argparse.ArgumentTypeError(f"must be >= {low}, got {value}")
        return value
    return parse


def _exponents(text):
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad exponent list: {text!r}") from None
    if not values or any(e < 1 for e in values):
        raise argparse.ArgumentTypeError("exponents must be positive integers")
    return values


def _add_progression(p):
    p.add_argument("--kind", required=True, type=str.lower, choices=[k.value for k in Kind])
    p.add_argument("--u0", required=True, type=_int_at_least(1))
    p.add_argument("--d", required=True, type=_int_at_least(1))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apconcat",
        description="Closed-form terms of concatenated arithmetic progressions.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    p = sub.add_parser("eval", help="print the n-th term (or its residue)")
    _add_progression(p)
    p.add_argument("--n", required=True, type=_int_at_least(0))
    p.add_argument("--mod", type=_int_at_least(2))
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("coeffs", help="print the coefficient set of one digit-length block")
    _add_progression(p)
    p.add_argument("--l", required=True, type=_int_at_least(1))
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("verify", help="compare closed form against naive concatenation")
    _add_progression(p)
    p.add_argument("--max", required=True, type=_int_at_least(0), dest="max_n")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fit", help="guess a constant-coefficient recurrence from a terms file")
    p.add_argument("terms_file")
    p.add_argument("--order", type=_int_at_least(1), default=3)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("bench", help="time closed form against naive concatenation")
    _add_progression(p)
    p.add_argument("--exp", required=True, type=_exponents, dest="exponents")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("digits", help="digit length of the n-th term, without computing it")
    _add_progression(p)
    p.add_argument("--n", required=True, type=_int_at_least(0))
    p.set_defaults(func=cmd_digits)
    return parser


def _prog(args):
    return Kind(args.kind), ArithmeticProgression(args.u0, args.d)


def cmd_eval(args, out):
    kind, prog = _prog(args)
    if args.mod is not None:
        text = str(evaluate_mod(kind, prog, args.n, args.mod))
    else:
        if args.out is None and concat_digit_count(kind, prog, args.n) > MAX_STDOUT_DIGITS:
            raise UsageError(f"term has more than {MAX_STDOUT_DIGITS} digits; use --out PATH")
        text = gmpy2.mpz(evaluate(kind, prog, args.n)).digits(10)
    if args.out is not None:
        with open(args.out, "w") as f:
            f.write(text + "\n")
    else:
        out.write(text + "\n")
    return 0


def cmd_coeffs(args, out):
    kind, prog = _prog(args)
    try:
        cs = coefficients_for_length(kind, prog, args.l)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fields = [("l", cs.l), ("t", cs.start), ("D", cs.D), ("A", cs.A), ("M", cs.M), ("T", cs.T)]
    if cs.p is not None:
        fields.append(("p", cs.p))
    for name, value in fields:
        out.write(f"{name}={gmpy2.mpz(value).digits(10)}\n")
    return 0


def cmd_verify(args, out):
    kind, prog = _prog(args)
    for n in range(args.max_n + 1):
        if evaluate(kind, prog, n) != oracle_eval(kind, prog, n):
            out.write(f"MISMATCH at n={n}\n")
            return EXIT_MISMATCH
    out.write(f"OK {args.max_n + 1} terms\n")
    return 0


def read_terms(path):
    try:
        with open(path) as f:
            words = f.read().split()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    try:
        return [int(gmpy2.mpz(w, 10)) for w in words]
    except ValueError:
        raise UsageError(f"{path}: expected whitespace-separated decimal integers") from None


def cmd_fit(args, out):
    terms = read_terms(args.terms_file)
    try:
        coeffs = fit_recurrence(terms, args.order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if coeffs is None:
        out.write(f"no recurrence of order {args.order}\n")
    else:
        out.write(" ".join(str(c) for c in coeffs) + "\n")
    return 0


def bench_row(kind, prog, e):
    """Time one exponent; returns None if the two paths disagree."""
    n = 10 ** e - 1
    cache = CoefficientCache()
    t0 = time.perf_counter()
    fast = evaluate(kind, prog, n, cache)
    cold = time.perf_counter() - t0
    t0 = time.perf_counter()
    fast = evaluate(kind, prog, n, cache)
    warm = time.perf_counter() - t0
    t0 = time.perf_counter()
    naive = oracle_eval(kind, prog, n)
    naive_time = time.perf_counter() - t0
    if fast != naive:
        return None
    return {
        "e": e,
        "n": n,
        "digits": concat_digit_count(kind, prog, n),
        "cold": cold,
        "warm": warm,
        "naive": naive_time,
    }


def cmd_bench(args, out):
    kind, prog = _prog(args)
    out.write(f"{'e':>3} {'n':>12} {'digits':>12} {'cold_s':>10} {'warm_s':>10} {'naive_s':>10} "
              f"{'x_cold':>8} {'x_warm':>8}\n")
    for e in args.exponents:
        row = bench_row(kind, prog, e)
        if row is None:
            out.write(f"{e:>3} MISMATCH: closed form and naive concatenation differ\n")
            return EXIT_MISMATCH
        # guard against timer resolution on tiny inputs
        x_cold = row["naive"] / max(row["cold"], 1e-9)
        x_warm = row["naive"] / max(row["warm"], 1e-9)
        out.write(f"{e:>3} {row['n']:>12} {row['digits']:>12} {row['cold']:>10.4f} {row['warm']:>10.4f} "
                  f"{row['naive']:>10.4f} {x_cold:>8.2f} {x_warm:>8.2f}\n")
    return 0


def cmd_digits(args, out):
    kind, prog = _prog(args)
    out.write(f"{concat_digit_count(kind, prog, args.n)}\n")
    return 0


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"apconcat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ExactDivisionError as exc:
        print(f"apconcat: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
