"""Core Module - units, periodic grid and transverse mode lattice"""

from .units import UnitSystem
from .grid import SpatialGrid, build_grid
from .lattice import Mode, ModeLattice, build_mode_lattice, polarization_triads, triad_defect

__all__ = [
    "UnitSystem",
    "SpatialGrid",
    "build_grid",
    "Mode",
    "ModeLattice",
    "build_mode_lattice",
    "polarization_triads",
    "triad_defect",
]
