"""
Spectral differential calculus and Maxwell residuals on the periodic grid

Derivatives are exact for band-limited fields: multiplication by i k in the
discrete Fourier basis. The Nyquist plane is zeroed; fields with content
there are rejected.
"""

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from src.core.grid import SpatialGrid
from src.core.units import UnitSystem
from src.fields.synthesis import FieldConfiguration, forward_transform, inverse_transform
from src.tensoralg.identities import EPSILON
from src.utils.errors import AliasingError
from src.utils.logger import get_logger

logger = get_logger(__name__)

NYQUIST_TOLERANCE = 1e-10

FieldLike = Union[FieldConfiguration, np.ndarray]


@dataclass(frozen=True)
class MaxwellResidual:
    """Max-abs defects of the curl and divergence equations"""
    curl_residual: float
    div_residual: float

    def within(self, tolerance: float) -> bool:
        return self.curl_residual <= tolerance and self.div_residual <= tolerance


def _wavevectors(grid: SpatialGrid) -> np.ndarray:
    """Broadcastable (3, N, N, N) array of angular wavevectors"""
    k = grid.wavenumbers()
    return np.stack(np.meshgrid(k, k, k, indexing="ij"))


def _guard_nyquist(spectrum: np.ndarray, grid: SpatialGrid) -> None:
    peak = np.max(np.abs(spectrum))
    if peak == 0.0:
        return
    h = grid.points_per_axis // 2
    nyquist = max(
        np.max(np.abs(spectrum[:, h, :, :])),
        np.max(np.abs(spectrum[:, :, h, :])),
        np.max(np.abs(spectrum[:, :, :, h])),
    )
    if nyquist > NYQUIST_TOLERANCE * peak:
        raise AliasingError(
            f"Field has spectral content on the Nyquist plane ({nyquist / peak:.3e} of peak)"
        )


def gradient(config: FieldConfiguration) -> np.ndarray:
    """
    Spectral gradient tensor.

    Returns:
        Array of shape (3, 3, N, N, N) with [j, l] = d_j F_l
    """
    spectrum = forward_transform(config.F)
    _guard_nyquist(spectrum, config.grid)
    k = _wavevectors(config.grid)
    return inverse_transform(1j * k[:, None] * spectrum[None, :])


def curl(config: FieldConfiguration) -> np.ndarray:
    """(curl F)_j = eps_jkl d_k F_l"""
    return np.einsum("jkl,kl...->j...", EPSILON, gradient(config))


def div(config: FieldConfiguration) -> np.ndarray:
    """d_k F_k"""
    spectrum = forward_transform(config.F)
    _guard_nyquist(spectrum, config.grid)
    k = _wavevectors(config.grid)
    return inverse_transform(np.sum(1j * k * spectrum, axis=0))


def maxwell_residual(
    config: FieldConfiguration,
    dF_dt: np.ndarray,
    units: Optional[UnitSystem] = None
) -> MaxwellResidual:
    """
    Defects of curl F = (i/c) dF/dt and div F = 0.

    Args:
        config: Field configuration
        dF_dt: Time derivative of F on the same grid
        units: Supplies c; defaults to the units the field was built with

    Returns:
        MaxwellResidual
    """
    c = (units or config.units).c
    curl_defect = curl(config) - (1j / c) * np.asarray(dF_dt)
    return MaxwellResidual(
        curl_residual=float(np.max(np.abs(curl_defect))),
        div_residual=float(np.max(np.abs(div(config)))),
    )
