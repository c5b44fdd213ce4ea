#!/usr/bin/env python3
"""Run verification suites and write one JSON report per suite plus a summary table."""

import argparse
import json
import time
from pathlib import Path

from linprod.report import Report, to_json
from linprod.suites import SUITES, RunConfig, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("suites", nargs="*", default=[s for s in SUITES if s != "all"])
    ap.add_argument("--out", default="results", help="directory for the reports")
    ap.add_argument("--with-generic5", action="store_true")
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    print(f"{'suite':<14}{'checks':>8}{'true':>7}{'false':>7}{'inconcl.':>10}{'seconds':>10}")
    for name in args.suites:
        t0 = time.perf_counter()
        report = Report(run_suite(RunConfig(suite=name, with_generic5=args.with_generic5)))
        secs = time.perf_counter() - t0
        (out / f"{name}.json").write_text(to_json(report))
        c = report.counts()
        print(f"{name:<14}{len(report.checks):>8}{c['true']:>7}{c['false']:>7}"
              f"{c['inconclusive']:>10}{secs:>10.1f}")
    summary = {p.stem: len(json.loads(p.read_text())["checks"]) for p in out.glob("*.json")}
    print(f"reports written to {out}/ ({sum(summary.values())} records)")


if __name__ == "__main__":
    main()
