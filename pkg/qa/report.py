"""
Verification reports.

A report is a named list of checks, each PASS, FAIL or SKIP with free-form
details. Reports render to canonical JSON and to a Markdown summary.
"""

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, Dict, Iterable, List

import pandas as pd
from loguru import logger

from qa.utils import atomic_write_text, get_report_paths

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"
STATUSES = (PASS, FAIL, SKIP)


@dataclass
class CheckResult:
    check_id: str
    status: str
    details: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"status must be one of {STATUSES}, got {self.status!r}")

    def to_dict(self) -> Dict[str, Any]:
        return {"check_id": self.check_id, "status": self.status, "details": self.details}


@dataclass
class Report:
    suite: str
    checks: List[CheckResult] = field(default_factory=list)

    def add(self, check_id: str, ok: bool, **details) -> CheckResult:
        result = CheckResult(check_id, PASS if ok else FAIL, details)
        self.checks.append(result)
        if not ok:
            logger.warning(f"[{self.suite}] {check_id} failed: {details}")
        return result

    def skip(self, check_id: str, reason: str) -> CheckResult:
        result = CheckResult(check_id, SKIP, {"reason": reason})
        self.checks.append(result)
        return result

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(CheckResult(prefix + c.check_id, c.status, c.details))

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if c.status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def counts(self) -> Dict[str, int]:
        return {s: sum(1 for c in self.checks if c.status == s) for s in STATUSES}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "counts": self.counts(),
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, default=str)

    def to_markdown(self) -> str:
        """Header, status counts and one table row per check."""
        now = datetime.now(timezone.utc).strftime("%Y-%m-%d %H:%M:%S UTC")
        counts = self.counts()
        sections = [
            f"# qtau verification report - {self.suite}",
            f"**Generated:** {now}",
            "## Summary",
            "| Status | Count |\n|--------|-------|\n"
            + "\n".join(f"| {s} | {counts[s]} |" for s in STATUSES),
        ]
        if self.checks:
            df = pd.DataFrame(
                [
                    {"check": c.check_id, "status": c.status, "details": _short(c.details)}
                    for c in self.checks
                ]
            )
            sections.append("## Checks")
            sections.append(_markdown_table(df))
        return "\n\n".join(sections) + "\n"

    def write(self, directory: str) -> Dict[str, str]:
        """Write ``<suite>.json`` and ``<suite>.md`` atomically; returns the paths by extension."""
        paths = get_report_paths(directory, self.suite)
        atomic_write_text(self.to_json(), paths["json"])
        atomic_write_text(self.to_markdown(), paths["md"])
        logger.info(f"Report {self.suite} written to {directory}")
        return paths


def merge(suite: str, reports: Iterable[Report]) -> Report:
    merged = Report(suite)
    for r in reports:
        merged.extend(r, prefix=f"{r.suite}/")
    return merged


def _short(details: Dict[str, Any], limit: int = 80) -> str:
    text = ", ".join(f"{k}={v}" for k, v in sorted(details.items()))
    return text if len(text) <= limit else text[: limit - 3] + "..."


def _markdown_table(df: pd.DataFrame) -> str:
    header = "| " + " | ".join(df.columns) + " |"
    rule = "|" + "|".join("-" * (len(c) + 2) for c in df.columns) + "|"
    rows = ["| " + " | ".join(str(v).replace("|", "\\|") for v in row) + " |" for row in df.itertuples(index=False)]
    return "\n".join([header, rule] + rows)
