"""Command line: verify suites, print decompositions, Betti tables, Rees generators, alpha."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .checks import CheckResult, run_check
from .fold import fold_ideal, verify_decomposition
from .poly import ParseError
from .rees import ReesContext, families, substitution_failures
from .report import EXIT_USAGE, Report, emit
from .suites import SUITES, RunConfig, alpha_checks, parse_grid, resolution_checks, run_suite


def _grid(text):
    try:
        return parse_grid(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _add_common(p: argparse.ArgumentParser):
    src = p.add_mutually_exclusive_group()
    src.add_argument("--catalog", help="comma-separated catalog ids")
    src.add_argument("--input", help="arrangement JSON file or inline JSON object")
    for flag in ("a", "e", "c", "m", "t", "N", "s"):
        p.add_argument(f"--{flag}", type=_grid, default=None,
                       help="'all', a value, a list '1,3' or a range '1..3'")
    p.add_argument("--budget-pairs", type=int, default=None, help="S-pair cap per Groebner basis")
    p.add_argument("--budget-ms", type=float, default=None, help="wall-clock cap per check")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--no-timing", action="store_true",
                   help="omit timings so identical runs give identical JSON")
    p.add_argument("-v", "--verbose", action="count", default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linprod", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)
    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--with-generic5", action="store_true",
                   help="include the slow five-line case in the rees suite")
    _add_common(v)
    for verb, text in (("decompose", "primary decomposition of I_a"),
                       ("betti", "Betti table of I_a"),
                       ("rees-gens", "generator families I-IV for a line arrangement"),
                       ("alpha", "alpha invariant of star-configuration symbolic powers")):
        _add_common(sub.add_parser(verb, help=text))
    return parser


def _config(args, suite="all") -> RunConfig:
    names = tuple(n.strip() for n in args.catalog.split(",")) if args.catalog else None
    return RunConfig(suite=suite, catalog=names, input=args.input, a=args.a, e=args.e,
                     c=args.c, m=args.m, t=args.t, N=args.N, s=args.s,
                     budget_pairs=args.budget_pairs, budget_ms=args.budget_ms,
                     with_generic5=getattr(args, "with_generic5", False),
                     verbosity=args.verbose, out=args.out)


def _targets(cfg: RunConfig):
    if cfg.input is None and not cfg.catalog:
        raise ValueError("give --catalog or --input")
    return cfg.arrangements([])


def _decompose(cfg: RunConfig) -> list[CheckResult]:
    out = []
    for arr in _targets(cfg):
        for a in cfg.a or range(1, arr.n + 1):
            if 1 <= a <= arr.n:
                out.append(verify_decomposition(arr, a, cfg.budget()))
    return out


def _betti(cfg: RunConfig) -> list[CheckResult]:
    out = []
    for arr in _targets(cfg):
        for a in cfg.a or range(1, arr.n + 1):
            if 1 <= a <= arr.n:
                out.extend(resolution_checks(fold_ideal(arr, a), arr.label(), {"a": a},
                                             a - 1, cfg.budget()))
    return out


def _rees_gens(cfg: RunConfig) -> list[CheckResult]:
    out = []
    for arr in _targets(cfg):
        ctx = ReesContext(arr)

        def body(ctx=ctx):
            fams = families(ctx)
            bad = substitution_failures(ctx, fams)
            detail = {"counts": {t: len(f) for t, f in fams.items()},
                      "families": {t: [{"name": e.name, "poly": str(e.poly),
                                        "provenance": e.provenance} for e in f.elements]
                                   for t, f in fams.items()}}
            return not bad, {"element": bad[0]} if bad else None, detail
        out.append(run_check("rees_generators", arr.label(), {}, body, cfg.budget()))
    return out


def _write(report: Report, args):
    data = emit(report, args.format, timings=not args.no_timing)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data.decode())
        if args.format == "json":
            sys.stdout.write("\n")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.verb == "verify":
            cfg = _config(args, args.suite)
            results = run_suite(cfg)
        else:
            cfg = _config(args)
            runner = {"decompose": _decompose, "betti": _betti, "rees-gens": _rees_gens,
                      "alpha": alpha_checks}[args.verb]
            results = runner(cfg)
    except ParseError as exc:
        print(json.dumps({"error": "parse", "message": str(exc), "line": exc.line,
                          "column": exc.column}), file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, KeyError, OSError) as exc:
        print(json.dumps({"error": "usage", "message": str(exc).strip("'\"")}), file=sys.stderr)
        return EXIT_USAGE
    report = Report(results)
    _write(report, args)
    return report.exit_code()


if __name__ == "__main__":
    sys.exit(main())
