"""
Convergence study: mode-sum kernels against their closed forms as the
cutoff grows
"""

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from src.commutators import (
    ANALYTIC,
    MODESUM,
    CommutatorPair,
    CommutatorSpec,
    TestFunction,
    commutator_scale,
    pauli_jordan_modesum,
    pauli_jordan_smeared,
    unequal_time_commutator,
)
from src.core import UnitSystem, build_grid, build_mode_lattice
from src.utils.config import RunConfig
from src.utils.logger import get_logger
from .results import SuiteResult, at_most

logger = get_logger(__name__)

CSV_HEADER = ("check", "pair", "k", "l", "tau", "cutoff", "analytic_re", "analytic_im", "modesum_re", "modesum_im", "rel_error")
CONVERGENCE_FILE = "convergence.csv"
ERROR_FLOOR = 1e-10
RESOLVED_ERROR = 1.0  # rows above this relative error precede the first resolved cutoff


@dataclass(frozen=True)
class ConvergenceRow:
    check: str
    pair: str
    k: int
    l: int
    tau: float
    cutoff: float
    analytic: complex
    modesum: complex
    rel_error: float

    def to_csv(self) -> Dict[str, str]:
        return {
            "check": self.check,
            "pair": self.pair,
            "k": str(self.k),
            "l": str(self.l),
            "tau": repr(self.tau),
            "cutoff": repr(self.cutoff),
            "analytic_re": repr(self.analytic.real),
            "analytic_im": repr(self.analytic.imag),
            "modesum_re": repr(self.modesum.real),
            "modesum_im": repr(self.modesum.imag),
            "rel_error": repr(self.rel_error),
        }


def _kernel_cases(config: RunConfig, units: UnitSystem) -> List[Tuple[str, CommutatorSpec]]:
    sigma = config.sigma
    lc = config.sigma_light_cone
    g = TestFunction(np.zeros(3), sigma)
    near = TestFunction(np.array([0.0, 0.0, 1.25 * sigma]), sigma)
    g_lc = TestFunction(np.zeros(3), lc)
    on_cone = TestFunction(np.array([2.0 * lc, 0.0, 0.0]), lc)
    return [
        ("E_B_equal_time", CommutatorSpec(CommutatorPair.E_B, 1, 2, 0.0, near, g)),
        ("E_E_equal_time", CommutatorSpec(CommutatorPair.E_E, 1, 2, 0.0, near, g)),
        ("E_B_light_cone", CommutatorSpec(CommutatorPair.E_B, 2, 3, 2.0 * lc / units.c, on_cone, g_lc)),
    ]


def run_converge(config: RunConfig, cutoffs: Sequence[float] = None) -> List[ConvergenceRow]:
    """
    Evaluate every convergence case at each cutoff.

    Args:
        config: Run configuration
        cutoffs: Increasing k_max values; the configuration's list by default

    Returns:
        Rows ordered by check, then cutoff
    """
    cutoffs = list(config.convergence_cutoffs if cutoffs is None else cutoffs)
    units = UnitSystem(hbar=config.hbar, c=config.c)
    grid = build_grid(config.box_length, config.points_per_axis)
    L = grid.box_length
    cases = _kernel_cases(config, units)

    g_pj = TestFunction(np.zeros(3), config.sigma_light_cone)
    tau_pj = 2.0 * config.sigma_light_cone / units.c
    pj_analytic = pauli_jordan_smeared(g_pj, tau_pj, units, L)

    rows: Dict[str, List[ConvergenceRow]] = {name: [] for name, _ in cases}
    rows["pauli_jordan"] = []

    for cutoff in tqdm(cutoffs, desc="Cutoffs", unit="cutoff"):
        lattice = build_mode_lattice(grid, cutoff, units)
        for name, spec in cases:
            analytic = unequal_time_commutator(spec, ANALYTIC, units=units, box_length=L).value
            modesum = unequal_time_commutator(spec, MODESUM, lattice).value
            scale = commutator_scale(spec, units)
            rows[name].append(ConvergenceRow(
                check=name, pair=spec.pair.value, k=spec.k, l=spec.l, tau=spec.tau, cutoff=float(cutoff),
                analytic=analytic, modesum=modesum,
                rel_error=float(abs(modesum - analytic) / max(abs(analytic), scale)),
            ))

        modesum = pauli_jordan_modesum(lattice, g_pj, tau_pj)
        rows["pauli_jordan"].append(ConvergenceRow(
            check="pauli_jordan", pair="D", k=0, l=0, tau=tau_pj, cutoff=float(cutoff),
            analytic=complex(pj_analytic), modesum=complex(modesum),
            rel_error=float(abs(modesum - pj_analytic) / abs(pj_analytic)),
        ))
        logger.debug(f"Cutoff {cutoff:.6g}: {len(lattice)} modes evaluated")

    return [row for name in rows for row in rows[name]]


def write_convergence_csv(rows: Sequence[ConvergenceRow], out_dir: str) -> Path:
    path = Path(out_dir) / CONVERGENCE_FILE
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=CSV_HEADER)
        writer.writeheader()
        for row in rows:
            writer.writerow(row.to_csv())
    logger.info(f"Wrote {len(rows)} convergence rows to {path}")
    return path


def convergence_checks(rows: Sequence[ConvergenceRow]) -> SuiteResult:
    """
    Error columns must not grow with the cutoff (errors under the floor count
    as equal); exact cancellations must stay at roundoff level.
    """
    suite = SuiteResult("converge")
    by_check: Dict[str, List[ConvergenceRow]] = {}
    for row in rows:
        by_check.setdefault(row.check, []).append(row)

    for name, series in by_check.items():
        errors = [max(r.rel_error, ERROR_FLOOR) for r in sorted(series, key=lambda r: r.cutoff)]
        resolved = next((i for i, e in enumerate(errors) if e < RESOLVED_ERROR), len(errors))
        tail = errors[resolved:]
        growth = max((b - a for a, b in zip(tail, tail[1:])), default=0.0)
        if name == "E_E_equal_time":
            suite.add(at_most(
                f"{name}_cancellation", "[E_k, E_l] = 0 at equal times", max(r.rel_error for r in series), 1e-12,
            ))
        else:
            suite.add(at_most(
                f"{name}_monotone", "mode sums converge to the smeared closed forms",
                max(growth, 0.0), 0.0, " -> ".join(f"{e:.2e}" for e in errors),
            ))
    return suite
