"""
Check results and report emission

Reports are deterministic: no timestamps, sorted keys, values formatted
with repr precision.
"""

import json
from dataclasses import dataclass, asdict, field
from pathlib import Path
from typing import Any, Dict, List

from src.utils.logger import get_logger

logger = get_logger(__name__)

SCHEMA_VERSION = 1
REPORT_FILE = "verification_report.json"
SUMMARY_FILE = "verification_summary.txt"


@dataclass
class CheckResult:
    """Outcome of one verification check"""
    name: str
    anchor: str       # the physical relation being verified
    passed: bool
    value: float
    tolerance: float
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class SuiteResult:
    name: str
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        return check


def at_most(name: str, anchor: str, value: float, tolerance: float, detail: str = "") -> CheckResult:
    """Passing when value <= tolerance"""
    value = float(value)
    result = CheckResult(name, anchor, bool(value <= tolerance), value, float(tolerance), detail)
    _log(result)
    return result


def at_least(name: str, anchor: str, value: float, threshold: float, detail: str = "") -> CheckResult:
    """Passing when value >= threshold"""
    value = float(value)
    result = CheckResult(name, anchor, bool(value >= threshold), value, float(threshold), detail)
    _log(result)
    return result


def _log(result: CheckResult) -> None:
    if result.passed:
        logger.info(f"PASS {result.name}: {result.value:.3e} (tolerance {result.tolerance:.1e})")
    else:
        logger.error(
            f"FAIL {result.name} [{result.anchor}]: {result.value:.3e} "
            f"(tolerance {result.tolerance:.1e}) {result.detail}"
        )


def build_report(suites: List[SuiteResult], config: Dict[str, Any]) -> Dict[str, Any]:
    checks = [c for s in suites for c in s.checks]
    failed = [c for c in checks if not c.passed]
    return {
        "schema_version": SCHEMA_VERSION,
        "config": config,
        "suites": {s.name: [c.to_dict() for c in s.checks] for s in suites},
        "summary": {
            "checks": len(checks),
            "passed": len(checks) - len(failed),
            "failed": len(failed),
            "status": "pass" if not failed else "fail",
            "failures": [f"{c.name} [{c.anchor}]" for c in failed],
        },
    }


def format_summary(suites: List[SuiteResult]) -> str:
    """Aligned-column table, one line per check"""
    rows = [("suite", "check", "relation", "value", "tolerance", "result")]
    for suite in suites:
        for c in suite.checks:
            rows.append((
                suite.name, c.name, c.anchor,
                f"{c.value:.3e}", f"{c.tolerance:.1e}",
                "PASS" if c.passed else "FAIL",
            ))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))

    total = sum(len(s.checks) for s in suites)
    failed = sum(len(s.failures) for s in suites)
    lines.append("")
    lines.append(f"{total - failed}/{total} checks passed")
    return "\n".join(lines) + "\n"


def write_report(suites: List[SuiteResult], config: Dict[str, Any], out_dir: str) -> Path:
    """Write the JSON report and the text summary; returns the report path"""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    report_path = out / REPORT_FILE
    with open(report_path, "w", encoding="utf-8") as f:
        json.dump(build_report(suites, config), f, indent=2, sort_keys=True)
        f.write("\n")

    (out / SUMMARY_FILE).write_text(format_summary(suites), encoding="utf-8")
    logger.info(f"Report written to {report_path}")
    return report_path
