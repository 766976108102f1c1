"""
Unit system - the values of hbar and c that fix every physical prefactor
"""

from dataclasses import dataclass

import numpy as np

from src.utils.errors import ValidationError


@dataclass(frozen=True)
class UnitSystem:
    """Values of hbar (action) and c (speed); defaults are natural units"""
    hbar: float = 1.0
    c: float = 1.0

    def __post_init__(self):
        if not (self.hbar > 0 and self.c > 0):
            raise ValidationError(f"hbar and c must be positive, got hbar={self.hbar}, c={self.c}")

    @property
    def commutator_prefactor(self) -> float:
        """4 pi hbar c, the strength of the equal-time [E, B] kernel"""
        return 4.0 * np.pi * self.hbar * self.c
