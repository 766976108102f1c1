"""Maxwell Module - spectral calculus, residuals, evolution, energy and momentum"""

from .spectral import MaxwellResidual, gradient, curl, div, maxwell_residual
from .functionals import (
    EnergyMomentum,
    EnergySplit,
    energy,
    momentum,
    energy_momentum,
    bilinear_overlap,
    energy_cross_term,
)
from .evolution import ConservationReport, evolve, conservation_drift

__all__ = [
    "MaxwellResidual",
    "gradient",
    "curl",
    "div",
    "maxwell_residual",
    "EnergyMomentum",
    "EnergySplit",
    "energy",
    "momentum",
    "energy_momentum",
    "bilinear_overlap",
    "energy_cross_term",
    "ConservationReport",
    "evolve",
    "conservation_drift",
]
