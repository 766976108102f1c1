"""Verification Module - check suites, convergence study and reports"""

from .results import CheckResult, SuiteResult, at_most, at_least, build_report, format_summary, write_report
from .suites import VerificationSuites
from .convergence import (
    CSV_HEADER,
    ConvergenceRow,
    run_converge,
    write_convergence_csv,
    convergence_checks,
)

__all__ = [
    "CheckResult",
    "SuiteResult",
    "at_most",
    "at_least",
    "build_report",
    "format_summary",
    "write_report",
    "VerificationSuites",
    "CSV_HEADER",
    "ConvergenceRow",
    "run_converge",
    "write_convergence_csv",
    "convergence_checks",
]
