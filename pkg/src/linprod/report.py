"""Reports: ordered check records rendered as JSON, CSV or text."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .checks import CheckResult

EXIT_OK, EXIT_FALSE, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3


@dataclass
class Report:
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, results):
        if isinstance(results, CheckResult):
            results = [results]
        self.checks.extend(results)
        return self

    def sorted_checks(self) -> list[CheckResult]:
        return sorted(self.checks, key=CheckResult.sort_key)

    def counts(self) -> dict[str, int]:
        out = {"true": 0, "false": 0, "inconclusive": 0}
        for c in self.checks:
            out[c.verdict] += 1
        return out

    def exit_code(self) -> int:
        counts = self.counts()
        if counts["false"]:
            return EXIT_FALSE
        if counts["inconclusive"]:
            return EXIT_INCONCLUSIVE
        return EXIT_OK


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    return str(value)


def to_json(report: Report, timings: bool = True) -> str:
    """Stable JSON; with timings=False the output is byte-identical across runs."""
    records = []
    for c in report.sorted_checks():
        rec = _jsonable(c.as_dict())
        if not timings:
            rec.pop("timing", None)
        records.append(rec)
    return json.dumps({"checks": records}, separators=(",", ":"))


CSV_FIELDS = ["check", "input", "params", "verdict", "witness", "ms"]


def to_csv(report: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for c in report.sorted_checks():
        params = ";".join(f"{k}={v}" for k, v in sorted(c.params.items()))
        wit = "" if c.witness is None else json.dumps(_jsonable(c.witness), sort_keys=True)
        w.writerow([c.check, c.input_id, params, c.verdict, wit, f"{c.ms:.1f}"])
    return buf.getvalue()


def to_text(report: Report) -> str:
    lines = []
    for c in report.sorted_checks():
        params = " ".join(f"{k}={v}" for k, v in sorted(c.params.items()))
        lines.append(f"[{c.verdict:>12}] {c.check} {c.input_id} {params}".rstrip())
        if c.witness is not None:
            lines.append(f"    witness: {c.witness}")
        for comp in c.detail.get("components", []):
            lines.append(f"    <{', '.join(comp['basis'])}>^{comp['exponent']}")
        if "diagram" in c.detail:
            lines.extend("    " + row for row in c.detail["diagram"].splitlines())
        for tag, elems in c.detail.get("families", {}).items():
            lines.extend(f"    ({tag}) {e['name']}: {e['poly']}" for e in elems)
    counts = report.counts()
    lines.append(f"{len(report.checks)} checks: {counts['true']} true, {counts['false']} false, "
                 f"{counts['inconclusive']} inconclusive")
    return "\n".join(lines) + "\n"


def emit(report: Report, fmt: str = "json", timings: bool = True) -> bytes:
    if fmt == "json":
        text = to_json(report, timings)
    elif fmt == "csv":
        text = to_csv(report)
    elif fmt == "text":
        text = to_text(report)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return text.encode()
