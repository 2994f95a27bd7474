"""Machine-readable check reports.

A Report entry records one verified identity: pass/fail, or `flagged` for a
documented paper discrepancy (engine output and printed form both carried).
Flagged entries never affect the exit code: the artifact's reproducibility
must not hinge on the paper's typos.

Structured output is a versioned JSON schema; two runs with the same
configuration are byte-identical apart from the timing fields.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional

REPORT_SCHEMA = "twistkit-report/1"

PASS = "pass"
FAIL = "fail"
FLAGGED = "flagged"


@dataclass
class Report:
    check_id: str
    status: str
    detail: str = ""
    residual: str = ""
    expected: str = ""
    actual: str = ""
    orders: Dict[str, Optional[int]] = field(default_factory=dict)
    timing_ms: float = 0.0

    def as_dict(self, with_timing: bool = True) -> dict:
        d = {"check": self.check_id, "status": self.status,
             "detail": self.detail, "residual": self.residual,
             "expected": self.expected, "actual": self.actual,
             "orders": {k: v for k, v in sorted(self.orders.items())}}
        if with_timing:
            d["timing_ms"] = round(self.timing_ms, 3)
        return d


def sort_reports(reports: List[Report]) -> List[Report]:
    return sorted(reports, key=lambda r: r.check_id)


def suite_status(reports: List[Report]) -> str:
    if any(r.status == FAIL for r in reports):
        return FAIL
    if any(r.status == FLAGGED for r in reports):
        return FLAGGED
    return PASS


def exit_code(reports: List[Report]) -> int:
    """0 if nothing failed (flagged entries do not fail the suite)."""
    return 1 if any(r.status == FAIL for r in reports) else 0


def render_text(reports: List[Report], verbose: bool = False) -> str:
    lines = []
    width = max((len(r.check_id) for r in reports), default=0)
    for r in sort_reports(reports):
        line = f"{r.status.upper():7s} {r.check_id:{width}s}"
        if r.detail:
            line += f"  {r.detail}"
        lines.append(line)
        if verbose and r.status != PASS:
            if r.residual:
                lines.append(f"        residual: {_clip(r.residual)}")
            if r.expected:
                lines.append(f"        printed:  {_clip(r.expected)}")
            if r.actual:
                lines.append(f"        engine:   {_clip(r.actual)}")
    counts = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    summary = ", ".join(f"{v} {k}" for k, v in sorted(counts.items()))
    lines.append(f"-- {len(reports)} checks: {summary}")
    return "\n".join(lines)


def _clip(s: str, n: int = 220) -> str:
    return s if len(s) <= n else s[:n] + "..."


def render_structured(reports: List[Report], with_timing: bool = True) -> str:
    data = {
        "schema": REPORT_SCHEMA,
        "status": suite_status(reports),
        "checks": [r.as_dict(with_timing) for r in sort_reports(reports)],
    }
    return json.dumps(data, indent=2, sort_keys=True)
