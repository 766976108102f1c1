"""
Energy and momentum functionals

Grid route:  H = (1/8 pi) sum (E^2 + B^2) dV
             P = (1/8 pi c) sum (E x B - B x E) dV
Mode route:  H = sum hbar omega |a|^2,  P = sum hbar k |a|^2

The momentum integrand keeps the symmetrized operator ordering; for
c-number fields both products commute and it reduces to 2 E x B.
"""

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from src.core.grid import SpatialGrid
from src.core.units import UnitSystem
from src.fields.amplitudes import ModeAmplitudes
from src.fields.synthesis import FieldConfiguration, synthesize
from src.utils.logger import get_logger

logger = get_logger(__name__)

State = Union[FieldConfiguration, ModeAmplitudes]


@dataclass(frozen=True)
class EnergyMomentum:
    H: float
    P: np.ndarray


@dataclass(frozen=True)
class EnergySplit:
    """Energies of two states, of their superposition, and the cross term"""
    H1: float
    H2: float
    H12: float
    cross: float


def energy(state: State) -> float:
    """Total field energy, from grid samples or from mode amplitudes"""
    if isinstance(state, ModeAmplitudes):
        lattice = state.lattice
        occupation = np.sum(np.abs(state.amp) ** 2, axis=1)
        return float(np.sum(lattice.units.hbar * lattice.omega * occupation))

    E, B = state.E, state.B
    density = np.sum(E * E + B * B, axis=0)
    return float(np.sum(density) * state.grid.cell_volume / (8.0 * np.pi))


def momentum(state: State, units: Optional[UnitSystem] = None) -> np.ndarray:
    """Total field momentum; grid states use their own units unless ``units`` is given"""
    if isinstance(state, ModeAmplitudes):
        lattice = state.lattice
        occupation = np.sum(np.abs(state.amp) ** 2, axis=1)
        return lattice.units.hbar * np.sum(lattice.k * occupation[:, None], axis=0)

    E, B = state.E, state.B
    integrand = np.cross(E, B, axis=0) - np.cross(B, E, axis=0)
    total = np.sum(integrand.reshape(3, -1), axis=1)
    c = (units or state.units).c
    return total * state.grid.cell_volume / (8.0 * np.pi * c)


def energy_momentum(state: State, units: Optional[UnitSystem] = None) -> EnergyMomentum:
    return EnergyMomentum(H=energy(state), P=momentum(state, units))


def bilinear_overlap(m1: ModeAmplitudes, m2: ModeAmplitudes, grid: SpatialGrid) -> float:
    """(1/4 pi) sum (E1.E2 + B1.B2) dV, the cross term predicted for a superposition"""
    f1 = synthesize(m1, grid)
    f2 = synthesize(m2, grid)
    dot = np.sum(f1.E * f2.E + f1.B * f2.B)
    return float(dot * grid.cell_volume / (4.0 * np.pi))


def energy_cross_term(m1: ModeAmplitudes, m2: ModeAmplitudes, grid: SpatialGrid) -> EnergySplit:
    """
    Energy non-additivity of superposed fields.

    Args:
        m1: First state
        m2: Second state (same lattice)
        grid: Quadrature grid

    Returns:
        EnergySplit with cross = H(m1 + m2) - H(m1) - H(m2)
    """
    H1 = energy(synthesize(m1, grid))
    H2 = energy(synthesize(m2, grid))
    H12 = energy(synthesize(m1 + m2, grid))
    split = EnergySplit(H1=H1, H2=H2, H12=H12, cross=H12 - H1 - H2)
    logger.debug(f"Energy split: H1={H1:.6g}, H2={H2:.6g}, H12={H12:.6g}, cross={split.cross:.6g}")
    return split
