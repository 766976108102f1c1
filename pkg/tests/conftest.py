"""
Shared fixtures: a small periodic grid and lattices on it
"""

import numpy as np
import pytest

from src.core import UnitSystem, build_grid, build_mode_lattice
from src.fields import random_amplitudes


@pytest.fixture
def units():
    return UnitSystem()


@pytest.fixture
def grid():
    return build_grid(1.0, 16)


@pytest.fixture
def field_lattice(grid, units):
    """Cutoff well below the grid Nyquist limit (16 pi)"""
    return build_mode_lattice(grid, 2.0 * np.pi * 2.5, units)


@pytest.fixture
def random_modes(field_lattice):
    return random_amplitudes(field_lattice, 12, seed=7)


@pytest.fixture
def commutator_lattice(grid, units):
    """Cutoff of 8 / sigma for sigma = 0.08"""
    return build_mode_lattice(grid, 100.0, units)
