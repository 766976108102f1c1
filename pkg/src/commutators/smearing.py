"""
Gaussian test functions and smeared distributions

Field values at a point are not observable; every commutator here is a
field average against normalized Gaussians

    f(r) = (2 pi sigma^2)^(-3/2) exp(-|r - center|^2 / (2 sigma^2)).

Sign convention for the smeared delta gradient, fixed once by integration
by parts:

    int int f(r') g(r) d_s' delta(r' - r) = - int (d_s f)(r) g(r) d^3r

``smeared_delta_gradient`` returns G_s = int g (d_s f), so the smeared
distribution equals -G_s.
"""

from dataclasses import dataclass
from itertools import product
from typing import Optional

import numpy as np

from src.core.grid import SpatialGrid
from src.core.units import UnitSystem
from src.utils.errors import ValidationError

MAX_SIGMA_FRACTION = 0.1


@dataclass(frozen=True, eq=False)
class TestFunction:
    """Normalized isotropic Gaussian"""
    __test__ = False  # keep pytest from collecting this class

    center: np.ndarray
    sigma: float

    def __post_init__(self):
        center = np.asarray(self.center, dtype=float).reshape(3)
        if not self.sigma > 0:
            raise ValidationError(f"Test function width must be positive, got {self.sigma}")
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "sigma", float(self.sigma))

    @property
    def normalization(self) -> float:
        return (2.0 * np.pi * self.sigma ** 2) ** -1.5

    def __call__(self, points: np.ndarray) -> np.ndarray:
        """Evaluate at points of shape (..., 3)"""
        offset = np.asarray(points, dtype=float) - self.center
        return self.normalization * np.exp(-np.sum(offset * offset, axis=-1) / (2.0 * self.sigma ** 2))

    def fourier(self, k: np.ndarray) -> np.ndarray:
        """int f(r) exp(i k.r) d^3r for wavevectors of shape (M, 3)"""
        k = np.asarray(k, dtype=float)
        return np.exp(1j * k @ self.center - 0.5 * self.sigma ** 2 * np.sum(k * k, axis=-1))

    def _images(self, grid: SpatialGrid):
        coords = np.moveaxis(grid.coordinates(), 0, -1)
        for shift in product((-1, 0, 1), repeat=3):
            yield coords - self.center - grid.box_length * np.asarray(shift, dtype=float)

    def sample(self, grid: SpatialGrid) -> np.ndarray:
        """Periodized samples on the grid, shape (N, N, N)"""
        total = np.zeros(grid.shape)
        for offset in self._images(grid):
            total += np.exp(-np.sum(offset * offset, axis=-1) / (2.0 * self.sigma ** 2))
        return self.normalization * total

    def sample_gradient(self, grid: SpatialGrid, s: int) -> np.ndarray:
        """Periodized samples of d_s f (s in {1, 2, 3})"""
        total = np.zeros(grid.shape)
        for offset in self._images(grid):
            total += -offset[..., s - 1] / self.sigma ** 2 * np.exp(
                -np.sum(offset * offset, axis=-1) / (2.0 * self.sigma ** 2)
            )
        return self.normalization * total

    def check_fits(self, box_length: float) -> None:
        if self.sigma > MAX_SIGMA_FRACTION * box_length:
            raise ValidationError(
                f"Test function width {self.sigma} exceeds {MAX_SIGMA_FRACTION} of the box length {box_length}"
            )


def combined_width(f: TestFunction, g: TestFunction) -> float:
    """S with S^2 = sigma_f^2 + sigma_g^2"""
    return float(np.hypot(f.sigma, g.sigma))


def separation(f: TestFunction, g: TestFunction, box_length: Optional[float] = None) -> np.ndarray:
    """center_f - center_g, reduced to the nearest periodic image when a box is given"""
    d = f.center - g.center
    if box_length is not None:
        d = d - box_length * np.round(d / box_length)
    return d


def gaussian_overlap(f: TestFunction, g: TestFunction, box_length: Optional[float] = None) -> float:
    """int f g d^3r, a Gaussian of width S in the separation"""
    S = combined_width(f, g)
    d = separation(f, g, box_length)
    return float((2.0 * np.pi * S * S) ** -1.5 * np.exp(-np.dot(d, d) / (2.0 * S * S)))


def smeared_delta_gradient(
    f: TestFunction,
    g: TestFunction,
    s: int,
    box_length: Optional[float] = None
) -> float:
    """
    G_s = int g(r) (d_s f)(r) d^3r for two Gaussians.

    Args:
        f: Test function differentiated (attached to the primed point)
        g: Second test function
        s: Component in {1, 2, 3}
        box_length: When given, widths are checked against the box and the
            separation uses the nearest periodic image

    Returns:
        d_s O(d) / S^2 with O the Gaussian overlap and d = center_f - center_g
    """
    if s not in (1, 2, 3):
        raise ValidationError(f"Component index must be 1, 2 or 3, got {s}")
    if box_length is not None:
        f.check_fits(box_length)
        g.check_fits(box_length)
    S = combined_width(f, g)
    d = separation(f, g, box_length)
    return float(d[s - 1] * gaussian_overlap(f, g, box_length) / (S * S))


def smeared_delta_gradient_quadrature(f: TestFunction, g: TestFunction, s: int, grid: SpatialGrid) -> float:
    """Midpoint-rule value of int g (d_s f) over the periodic box"""
    integrand = g.sample(grid) * f.sample_gradient(grid, s)
    return float(np.sum(integrand) * grid.cell_volume)


def smearing_scale(f: TestFunction, g: TestFunction, units: UnitSystem = UnitSystem()) -> float:
    """4 pi hbar c (2 pi S^2)^(-3/2) / S, the natural size of a smeared kernel"""
    S = combined_width(f, g)
    return float(units.commutator_prefactor * (2.0 * np.pi * S * S) ** -1.5 / S)
