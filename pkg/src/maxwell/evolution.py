"""
Exact time evolution in mode space and conservation checks
"""

from dataclasses import dataclass

import numpy as np

from src.fields.amplitudes import ModeAmplitudes
from src.fields.synthesis import phase_factors
from .functionals import energy, momentum
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class ConservationReport:
    steps: int
    dt: float
    energy_drift: float     # max relative deviation of H
    momentum_drift: float   # max relative deviation of P (relative to H / c)


def evolve(modes: ModeAmplitudes, dt: float) -> ModeAmplitudes:
    """Rotate every amplitude by exp(-i omega dt)"""
    return modes.scaled_per_mode(phase_factors(modes.lattice, dt))


def conservation_drift(modes: ModeAmplitudes, dt: float, steps: int) -> ConservationReport:
    """
    Evolve ``steps`` times by ``dt`` and track H and P.

    Returns:
        ConservationReport with the worst relative drifts
    """
    c = modes.lattice.units.c
    H0 = energy(modes)
    P0 = momentum(modes)
    reference = H0 if H0 > 0 else 1.0

    energy_drift = 0.0
    momentum_drift = 0.0
    state = modes
    for _ in range(steps):
        state = evolve(state, dt)
        energy_drift = max(energy_drift, abs(energy(state) - H0) / reference)
        momentum_drift = max(
            momentum_drift, float(np.max(np.abs(momentum(state) - P0))) * c / reference
        )

    logger.debug(
        f"Conservation over {steps} steps: energy drift {energy_drift:.3e}, "
        f"momentum drift {momentum_drift:.3e}"
    )
    return ConservationReport(steps=steps, dt=dt, energy_drift=energy_drift, momentum_drift=momentum_drift)
