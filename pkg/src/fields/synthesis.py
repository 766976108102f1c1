"""
Field synthesis - complex field F = E + iB on the periodic grid

Expansion (the single place the phase convention is fixed):

    E(r, t) = sum_m,lam  i N_m a_m,lam e_lam      exp(i k.r - i omega t) + c.c.
    B(r, t) = sum_m,lam  i N_m a_m,lam (k_hat x e_lam) exp(i k.r - i omega t) + c.c.

with N_m = sqrt(2 pi hbar omega_m / V), chosen so that one mode of amplitude
``a`` carries energy hbar omega |a|^2. The quantized field replaces ``a`` by
an annihilation operator; the commutator kernels are built from the same
coefficients.

Discrete transforms: forward F_hat(n) = N^-3 sum_j F(j) exp(-2 pi i n.j / N),
inverse without prefactor, i.e. ``norm="forward"`` in scipy.fft.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy import fft as sfft

from src.core.grid import SpatialGrid
from src.core.lattice import ModeLattice
from src.core.units import UnitSystem
from .amplitudes import ModeAmplitudes
from src.utils.errors import AliasingError, ValidationError
from src.utils.logger import get_logger

logger = get_logger(__name__)

FFT_SIGN = -1
FFT_NORM = "forward"
FFT_AXES = (-3, -2, -1)


@dataclass(frozen=True, eq=False)
class FieldConfiguration:
    """Complex field F = E + iB sampled on a grid at time t, in the units it was built with"""
    F: np.ndarray  # (3, N, N, N) complex
    t: float
    grid: SpatialGrid
    units: UnitSystem = UnitSystem()

    def __post_init__(self):
        F = np.asarray(self.F, dtype=np.complex128)
        if F.shape != (3,) + self.grid.shape:
            raise ValidationError(f"Field must have shape {(3,) + self.grid.shape}, got {F.shape}")
        object.__setattr__(self, "F", F)

    @property
    def E(self) -> np.ndarray:
        return self.F.real

    @property
    def B(self) -> np.ndarray:
        return self.F.imag

    @property
    def scale(self) -> float:
        """Largest field magnitude, the reference for relative tolerances"""
        return float(np.max(np.abs(self.F))) if self.F.size else 0.0

    def with_field(self, F: np.ndarray, t: float = None) -> "FieldConfiguration":
        return FieldConfiguration(F=F, t=self.t if t is None else t, grid=self.grid, units=self.units)


def forward_transform(field: np.ndarray) -> np.ndarray:
    return sfft.fftn(field, axes=FFT_AXES, norm=FFT_NORM, workers=-1)


def inverse_transform(coefficients: np.ndarray) -> np.ndarray:
    return sfft.ifftn(coefficients, axes=FFT_AXES, norm=FFT_NORM, workers=-1)


def mode_normalization(lattice: ModeLattice) -> np.ndarray:
    """N_m = sqrt(2 pi hbar omega_m / V) for every mode"""
    return np.sqrt(2.0 * np.pi * lattice.units.hbar * lattice.omega / lattice.volume)


def phase_factors(lattice: ModeLattice, dt: float) -> np.ndarray:
    """exp(-i omega dt) per mode"""
    return np.exp(-1j * lattice.omega * dt)


def _check_compatible(lattice: ModeLattice, grid: SpatialGrid) -> None:
    if not lattice.compatible_with(grid):
        raise ValidationError(
            f"Lattice box {lattice.box_length} does not match grid box {grid.box_length}"
        )
    if lattice.k_max >= grid.nyquist:
        raise AliasingError(
            f"Lattice cutoff {lattice.k_max:.6g} is at or above the grid Nyquist limit {grid.nyquist:.6g}"
        )


def _field_coefficients(modes: ModeAmplitudes, t: float) -> Tuple[np.ndarray, np.ndarray]:
    """Per-mode vector coefficients of exp(i k.r) for E and B, each (M, 3)"""
    lattice = modes.lattice
    a = modes.amp * phase_factors(lattice, t)[:, None]
    weight = 1j * mode_normalization(lattice)[:, None] * a
    c_E = np.einsum("ml,mli->mi", weight, lattice.polarizations())
    c_B = np.einsum("ml,mli->mi", weight, lattice.magnetic_polarizations())
    return c_E, c_B


def _scatter(lattice: ModeLattice, grid: SpatialGrid, coefficients: np.ndarray) -> np.ndarray:
    spectrum = np.zeros((3,) + grid.shape, dtype=np.complex128)
    idx = np.mod(lattice.n, grid.points_per_axis)
    spectrum[:, idx[:, 0], idx[:, 1], idx[:, 2]] = coefficients.T
    return spectrum


def synthesize(modes: ModeAmplitudes, grid: SpatialGrid, t: float = 0.0) -> FieldConfiguration:
    """
    Synthesize F = E + iB on the grid.

    Args:
        modes: Mode amplitudes
        grid: Target grid (same box as the lattice, cutoff below Nyquist)
        t: Time

    Returns:
        FieldConfiguration at time t
    """
    lattice = modes.lattice
    _check_compatible(lattice, grid)

    c_E, c_B = _field_coefficients(modes, t)
    E = 2.0 * inverse_transform(_scatter(lattice, grid, c_E)).real
    B = 2.0 * inverse_transform(_scatter(lattice, grid, c_B)).real
    return FieldConfiguration(F=E + 1j * B, t=float(t), grid=grid, units=lattice.units)


def to_EB(config: FieldConfiguration) -> Tuple[np.ndarray, np.ndarray]:
    """Split F into (E, B) = (Re F, Im F)"""
    return config.F.real.copy(), config.F.imag.copy()


def from_EB(
    E: np.ndarray,
    B: np.ndarray,
    grid: SpatialGrid,
    t: float = 0.0,
    units: Optional[UnitSystem] = None
) -> FieldConfiguration:
    return FieldConfiguration(F=E + 1j * B, t=t, grid=grid, units=units or UnitSystem())


def time_derivative(modes: ModeAmplitudes, grid: SpatialGrid, t: float = 0.0) -> np.ndarray:
    """Analytic dF/dt: every amplitude multiplied by -i omega"""
    rate = modes.scaled_per_mode(-1j * modes.lattice.omega)
    return synthesize(rate, grid, t).F


def finite_difference_time_derivative(
    modes: ModeAmplitudes,
    grid: SpatialGrid,
    t: float = 0.0,
    h: float = None
) -> np.ndarray:
    """Central-difference dF/dt, step 1e-4 / omega_max by default"""
    if h is None:
        h = 1e-4 / float(np.max(modes.lattice.omega))
    forward = synthesize(modes, grid, t + h).F
    backward = synthesize(modes, grid, t - h).F
    return (forward - backward) / (2.0 * h)


def add_longitudinal(config: FieldConfiguration, n, amplitude: float) -> FieldConfiguration:
    """
    Add the curl-free component amplitude * k_hat * sin(k.r) to E.

    The result violates the transversality condition, with
    div F = amplitude * |k| * cos(k.r).
    """
    n = np.asarray(n, dtype=float)
    if not np.any(n):
        raise ValidationError("Longitudinal component needs a nonzero wavevector")
    grid = config.grid
    k = 2.0 * np.pi * n / grid.box_length
    phase = np.tensordot(k, grid.coordinates(), axes=1)
    k_hat = k / np.linalg.norm(k)
    extra = amplitude * k_hat[:, None, None, None] * np.sin(phase)[None]
    return config.with_field(config.F + extra)


def check_translation_generation(modes: ModeAmplitudes, grid: SpatialGrid, delta) -> float:
    """
    Compare a grid translation of the synthesized field with the per-mode
    phase multiplication exp(i k.delta).

    Args:
        modes: Mode amplitudes
        grid: Grid
        delta: Translation, an integer multiple of the spacing on each axis

    Returns:
        max |F(r + delta) - F_phase_shifted(r)| over points and components
    """
    delta = np.asarray(delta, dtype=float)
    steps = delta / grid.spacing
    if np.max(np.abs(steps - np.rint(steps))) > 1e-9:
        raise ValidationError(
            f"Translation {delta.tolist()} is not a multiple of the grid spacing {grid.spacing:.6g}"
        )
    shift = tuple(int(-s) for s in np.rint(steps))

    translated = np.roll(synthesize(modes, grid).F, shift=shift, axis=FFT_AXES)
    phases = np.exp(1j * modes.lattice.k @ delta)
    shifted = synthesize(modes.scaled_per_mode(phases), grid).F

    discrepancy = float(np.max(np.abs(translated - shifted)))
    logger.debug(f"Translation check delta={delta.tolist()}: discrepancy={discrepancy:.3e}")
    return discrepancy
