"""
Periodic spatial grid

Point ``i`` on each axis sits at ``i * L / N``; index arithmetic wraps
modulo N. N is even so the grid is closed under point inversion
``i -> (N - i) mod N``.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.utils.errors import ValidationError
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class SpatialGrid:
    """Cubic periodic grid of N^3 points on a box of side L"""
    box_length: float
    points_per_axis: int

    @property
    def spacing(self) -> float:
        return self.box_length / self.points_per_axis

    @property
    def volume(self) -> float:
        return self.box_length ** 3

    @property
    def cell_volume(self) -> float:
        return self.spacing ** 3

    @property
    def shape(self) -> Tuple[int, int, int]:
        n = self.points_per_axis
        return (n, n, n)

    @property
    def size(self) -> int:
        return self.points_per_axis ** 3

    @property
    def nyquist(self) -> float:
        """Largest resolvable wavenumber, pi * N / L"""
        return np.pi * self.points_per_axis / self.box_length

    def axis(self) -> np.ndarray:
        """Coordinates along one axis"""
        return np.arange(self.points_per_axis) * self.spacing

    def coordinates(self) -> np.ndarray:
        """Point coordinates, shape (3, N, N, N)"""
        x = self.axis()
        return np.stack(np.meshgrid(x, x, x, indexing="ij"))

    def wrap(self, index):
        """Periodic index reduction"""
        return np.mod(index, self.points_per_axis)

    def wavenumbers(self) -> np.ndarray:
        """Angular wavenumbers along one axis in FFT order, Nyquist entry zeroed"""
        k = 2.0 * np.pi * np.fft.fftfreq(self.points_per_axis, d=self.spacing)
        k[self.points_per_axis // 2] = 0.0
        return k


def build_grid(box_length: float, points_per_axis: int) -> SpatialGrid:
    """
    Build a periodic grid.

    Args:
        box_length: Side L of the periodic box (> 0)
        points_per_axis: N, even and at least 4

    Returns:
        SpatialGrid
    """
    if not box_length > 0:
        raise ValidationError(f"Box length must be positive, got {box_length}")
    if int(points_per_axis) != points_per_axis:
        raise ValidationError(f"Points per axis must be an integer, got {points_per_axis}")
    points_per_axis = int(points_per_axis)
    if points_per_axis % 2:
        raise ValidationError(f"Points per axis must be even, got odd N={points_per_axis}")
    if points_per_axis < 4:
        raise ValidationError(f"Points per axis must be at least 4, got N={points_per_axis}")

    grid = SpatialGrid(box_length=float(box_length), points_per_axis=points_per_axis)
    logger.debug(f"Grid built: L={grid.box_length}, N={points_per_axis}, spacing={grid.spacing:.6g}")
    return grid
