"""Command-line interface: ``eulersums <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 request for a formula that has no closed form.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import closed_forms as cf
from .exact import PiPoly
from .fps import coeff
from .genfun import phi_series, psi1_series, psi_tot_series
from .oracle import eval_word_refined
from .verify import SUITES, run_suite
from .words import WordError, parse_composition, parse_word, xi_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNSUPPORTED = 0, 1, 2, 3
MAX_N = 16

SERIES = {"phi": phi_series, "psi_tot": psi_tot_series, "psi1": psi1_series}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def _env_max_n(default: int | None) -> int | None:
    raw = os.environ.get("EULERSUM_MAX_N")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"EULERSUM_MAX_N must be an integer, got {raw!r}") from None


def cmd_eval(args) -> int:
    if (args.word is None) == (args.xi is None):
        raise UsageError("give exactly one of --word or --xi")
    w = parse_word(args.word) if args.word is not None else xi_word(parse_composition(args.xi))
    r = eval_word_refined(w, args.tol)
    print(_dump({"error_estimate": r.error_estimate, "terms_used": r.terms_used, "value": r.value, "word": str(w)}))
    return EXIT_OK


def _xi_value(n: int, d: int, method: str) -> PiPoly:
    if method == "thm11":
        return cf.xi_thm11(n, d)
    if method == "thm13":
        return cf.xi_thm13(n, d)
    cf._check_nd(n, d)
    return PiPoly.monomial(coeff(phi_series(max(n, MAX_N)), n, d), 2 * n)


def cmd_xi(args) -> int:
    n, d = args.n, args.d
    if n > MAX_N:
        raise UsageError(f"n={n} exceeds the configured maximum {MAX_N}")
    methods = ["thm11", "thm13", "genfun"] if args.method == "all" else [args.method]
    values = {m: _xi_value(n, d, m) for m in methods}
    distinct = set(values.values())
    if len(distinct) != 1:
        for m, v in values.items():
            print(f"{m}: {_dump(v.to_json())}", file=sys.stderr)
        print("methods disagree", file=sys.stderr)
        return EXIT_FAIL
    print(_dump(distinct.pop().to_json()))
    return EXIT_OK


def cmd_asum(args) -> int:
    n, d = args.n, args.d
    if args.all:
        if d > 4:
            raise cf.UnsupportedFormulaError(f"unsupported: the alpha table is only available for d <= 4, got d={d}")
        rows = {str(a): cf.a_alpha_small_depth(n, d, a).to_json() for a in range(d + 1)}
        out = {"alpha": rows, "d": d, "n": n, "total": cf.a_total(n, d).to_json()}
        print(_dump(out))
        return EXIT_OK
    if args.alpha is None:
        print(_dump(cf.a_total(n, d).to_json()))
    else:
        print(_dump(cf.a_alpha_small_depth(n, d, args.alpha).to_json()))
    return EXIT_OK


def cmd_series(args) -> int:
    if not 0 <= args.max_n <= MAX_N:
        raise UsageError(f"--max-n must be between 0 and {MAX_N}")
    s = SERIES[args.which](max(args.max_n, 1))
    matrix = [[str(coeff(s, n, d)) for d in range(args.max_n + 1)] for n in range(args.max_n + 1)]
    print(_dump({"grading": "matrix[n][d] is the rational coefficient of u^n v^d; its value is that times pi^(2n)",
                 "matrix": matrix, "series": args.which}))
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    max_n = args.max_n if args.max_n is not None else _env_max_n(None)
    reports = [run_suite(s, max_n) for s in suites]
    for r in reports:
        print(r.summary(), file=sys.stderr)
    print(_dump({"reports": [r.to_json() for r in reports], "status": "pass" if all(r.passed for r in reports) else "fail"}))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _table_entries(kind: str, max_n: int, d: int | None):
    if kind == "xi":
        for n in range(1, max_n + 1):
            for dd in range(1, n + 1):
                yield n, dd, None, cf.xi_thm11(n, dd)
    else:
        if d is None:
            raise UsageError("--kind a_alpha needs -d")
        for n in range(max(d, 1), max_n + 1):
            for a in range(d + 1):
                yield n, d, a, cf.a_alpha_small_depth(n, d, a)


def cmd_table(args) -> int:
    entries = list(_table_entries(args.kind, args.max_n, args.d))
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "d", "alpha", "pi_exp", "num", "den"])
        for n, d, a, v in entries:
            for e, c in sorted(v.terms.items()):
                writer.writerow([n, d, "" if a is None else a, e, c.numerator, c.denominator])
        text = buf.getvalue()
    else:
        rows = [{"alpha": a, "d": d, "n": n, "value": v.to_json()} for n, d, a, v in entries]
        text = _dump({"entries": rows, "kind": args.kind}) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="eulersums", description="Exact and numeric restricted sums of alternating Euler sums.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", help="evaluate one Euler sum numerically")
    e.add_argument("--word", help='comma-separated entries, "b" suffix marks a bar, e.g. "2b,4"')
    e.add_argument("--xi", help='composition "j1,...,jd" mapped to its xi-word')
    e.add_argument("--tol", type=float, default=None)
    e.set_defaults(func=cmd_eval)

    x = sub.add_parser("xi", help="exact Xi(2n, d)")
    x.add_argument("-n", type=int, required=True)
    x.add_argument("-d", type=int, required=True)
    x.add_argument("--method", choices=["thm11", "thm13", "genfun", "all"], default="all")
    x.set_defaults(func=cmd_xi)

    a = sub.add_parser("asum", help="exact A_alpha(2n, d)")
    a.add_argument("-n", type=int, required=True)
    a.add_argument("-d", type=int, required=True)
    a.add_argument("--alpha", type=int)
    a.add_argument("--all", action="store_true", help="every alpha for d <= 4 plus the total")
    a.set_defaults(func=cmd_asum)

    s = sub.add_parser("series", help="coefficient matrix of a generating function")
    s.add_argument("which", choices=sorted(SERIES))
    s.add_argument("--max-n", type=int, default=6)
    s.set_defaults(func=cmd_series)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=[*SUITES, "all"], default="exact")
    v.add_argument("--max-n", type=int, default=None)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="emit a deterministic table of exact values")
    t.add_argument("--kind", choices=["xi", "a_alpha"], required=True)
    t.add_argument("--max-n", type=int, default=6)
    t.add_argument("-d", type=int)
    t.add_argument("--format", choices=["json", "csv"], default="json")
    t.add_argument("--output", "-o")
    t.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except cf.UnsupportedFormulaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (UsageError, WordError, cf.DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
