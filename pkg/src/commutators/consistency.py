"""
Consistency of the commutator kernels with the field equations

The equal-time kernel [F+_k(r), F_s(r')] convolved with a classical field
F_l gives

    Q_ksl(r) = 8 pi hbar c eps_ksu d_u F_l(r),

from which the tensor M_kls = -2 Q_ksl = -16 pi hbar c eps_ksu d_u F_l is
assembled. It is compared with the direct spectral evaluation, and two of
its index contractions are checked:

    (delta_jk delta_ls - delta_jl delta_sk + delta_js delta_kl) M_kls = 0
    eps_kls M_kls = 32 pi hbar c d_u F_u

The second one vanishes only for transverse fields.
"""

from dataclasses import dataclass, asdict
from typing import Dict, Sequence

import numpy as np

from src.core.grid import SpatialGrid
from src.core.lattice import ModeLattice
from src.core.units import UnitSystem
from src.fields.amplitudes import ModeAmplitudes
from src.fields.synthesis import (
    FieldConfiguration,
    add_longitudinal,
    forward_transform,
    inverse_transform,
    synthesize,
)
from src.maxwell.spectral import div, gradient
from src.tensoralg.identities import EPSILON, antisym_to_vector
from src.tensoralg.kernels import (
    Tensor3x3Field,
    decompose_GU_SA,
    exchange_symmetry_defect,
    pseudotensor_parity_check,
    random_pm_points,
)
from .kernels import CommutatorPair, mode_coefficients, modesum_matrix
from .smearing import TestFunction, smeared_delta_gradient, smearing_scale
from src.utils.errors import ValidationError
from src.utils.logger import get_logger

logger = get_logger(__name__)

DEFAULT_LONGITUDINAL_MODE = (1, 0, 0)


@dataclass(frozen=True)
class MTensorReport:
    """Two routes to one smeared component of M and the index contractions"""
    lhs: complex                      # kernel convolution route
    rhs: complex                      # spectral derivative route
    identity_contraction: float       # max |(dd - dd + dd) M|, identically zero
    divergence_contraction: float     # max |eps_kls M_kls|
    divergence_mismatch: float        # max |eps_kls M_kls - 32 pi hbar c div F|
    scale: float                      # max |M| over the grid

    @property
    def route_difference(self) -> float:
        return abs(self.lhs - self.rhs)

    def transverse(self, tolerance: float = 1e-8) -> bool:
        return self.divergence_contraction <= tolerance * max(self.scale, np.finfo(float).tiny)


def _kernel_spectrum(lattice: ModeLattice, grid: SpatialGrid) -> np.ndarray:
    """
    Grid Fourier coefficients of the equal-time [F+_k, F_s] mode-sum kernel,
    shape (3, 3, N, N, N).
    """
    u_fd, v_fd = mode_coefficients(lattice, "Fd")
    u_f, v_f = mode_coefficients(lattice, "F")
    forward = np.einsum("mpa,mpb->abm", u_fd, v_f)
    backward = np.einsum("mpa,mpb->abm", v_fd, u_f)

    n = grid.points_per_axis
    plus = np.mod(lattice.n, n)
    minus = np.mod(-lattice.n, n)
    spectrum = np.zeros((3, 3) + grid.shape, dtype=np.complex128)
    np.add.at(spectrum, (slice(None), slice(None), plus[:, 0], plus[:, 1], plus[:, 2]), forward)
    np.add.at(spectrum, (slice(None), slice(None), minus[:, 0], minus[:, 1], minus[:, 2]), -backward)
    return spectrum


def kernel_convolution(lattice: ModeLattice, config: FieldConfiguration) -> np.ndarray:
    """
    Q_ksl(r) = int [F+_k(r), F_s(r')] F_l(r') d^3r' on the periodic box.

    Returns:
        Array of shape (3, 3, 3, N, N, N) indexed [k, s, l]
    """
    grid = config.grid
    kernel = _kernel_spectrum(lattice, grid)
    field = forward_transform(config.F)
    product = lattice.volume * kernel[:, :, None] * field[None, None, :]
    flat = product.reshape((27,) + grid.shape)
    return inverse_transform(flat).reshape((3, 3, 3) + grid.shape)


def _prepare_field(
    modes: ModeAmplitudes,
    grid: SpatialGrid,
    longitudinal_amplitude: float,
    longitudinal_mode: Sequence[int]
) -> FieldConfiguration:
    config = synthesize(modes, grid)
    if longitudinal_amplitude:
        if modes.lattice.index_of(longitudinal_mode) < 0:
            raise ValidationError(f"Longitudinal mode {tuple(longitudinal_mode)} is not on the lattice")
        config = add_longitudinal(config, longitudinal_mode, longitudinal_amplitude)
    return config


def m_tensor_check(
    modes: ModeAmplitudes,
    grid: SpatialGrid,
    k: int,
    l: int,
    s: int,
    f: TestFunction,
    longitudinal_amplitude: float = 0.0,
    longitudinal_mode: Sequence[int] = DEFAULT_LONGITUDINAL_MODE
) -> MTensorReport:
    """
    Compare the kernel route and the spectral route to smeared M_kls.

    Args:
        modes: Band-limited field state
        grid: Grid for synthesis and smearing
        k, l, s: Component indices in {1, 2, 3}
        f: Smearing test function
        longitudinal_amplitude: Strength of an injected curl-free component
        longitudinal_mode: Integer wavevector of that component

    Returns:
        MTensorReport
    """
    for index in (k, l, s):
        if index not in (1, 2, 3):
            raise ValidationError(f"Indices must be 1, 2 or 3, got {(k, l, s)}")

    units = modes.lattice.units
    strength = 16.0 * np.pi * units.hbar * units.c
    config = _prepare_field(modes, grid, longitudinal_amplitude, longitudinal_mode)

    Q = kernel_convolution(modes.lattice, config)
    M_kernel = -2.0 * np.swapaxes(Q, 1, 2)  # [k, l, s]
    M_spectral = -strength * np.einsum("ksu,ul...->kls...", EPSILON, gradient(config))

    weight = f.sample(grid) * grid.cell_volume
    lhs = complex(np.sum(weight * M_kernel[k - 1, l - 1, s - 1]))
    rhs = complex(np.sum(weight * M_spectral[k - 1, l - 1, s - 1]))

    delta = np.eye(3)
    identity = (
        np.einsum("jk,ls,kls...->j...", delta, delta, M_kernel)
        - np.einsum("jl,sk,kls...->j...", delta, delta, M_kernel)
        + np.einsum("js,kl,kls...->j...", delta, delta, M_kernel)
    )
    contraction = np.einsum("kls,kls...->...", EPSILON, M_kernel)
    expected = 2.0 * strength * div(config)

    report = MTensorReport(
        lhs=lhs,
        rhs=rhs,
        identity_contraction=float(np.max(np.abs(identity))),
        divergence_contraction=float(np.max(np.abs(contraction))),
        divergence_mismatch=float(np.max(np.abs(contraction - expected))),
        scale=float(np.max(np.abs(M_spectral))),
    )
    logger.debug(
        f"M tensor ({k},{l},{s}): routes differ by {report.route_difference:.3e}, "
        f"eps.M = {report.divergence_contraction:.3e} (scale {report.scale:.3e})"
    )
    return report


def generator_identity_check(modes: ModeAmplitudes, grid: SpatialGrid, s: int, l: int) -> float:
    """
    Recover d_s F_l from the kernel convolution via eps_ksv Q_ksl = 16 pi hbar c d_v F_l.

    Returns:
        max |recovered - spectral| relative to max |d F|
    """
    if s not in (1, 2, 3) or l not in (1, 2, 3):
        raise ValidationError(f"Indices must be 1, 2 or 3, got {(s, l)}")
    units = modes.lattice.units
    config = synthesize(modes, grid)
    Q = kernel_convolution(modes.lattice, config)
    recovered = np.einsum("ksv,ks...->v...", EPSILON, Q[:, :, l - 1]) / (16.0 * np.pi * units.hbar * units.c)

    grad = gradient(config)
    reference = float(np.max(np.abs(grad)))
    error = float(np.max(np.abs(recovered[s - 1] - grad[s - 1, l - 1])))
    return error / reference if reference > 0 else error


@dataclass(frozen=True)
class SymmetryAudit:
    """Symmetry defects of the sampled equal-time [F+_k, F_l] kernel, relative to its scale"""
    seed: int
    sample_count: int
    cutoff: float
    sigma: float
    scale: float
    imaginary_fraction: float
    exchange_defect: float
    parity_defect: float
    au_fraction: float
    vector_error: float
    vector_oddness: float

    def passed(self, tolerance: float) -> bool:
        return (
            self.imaginary_fraction <= tolerance
            and self.exchange_defect <= tolerance
            and self.parity_defect <= tolerance
            and self.au_fraction >= 1.0 - tolerance
            and self.vector_error <= tolerance
            and self.vector_oddness <= tolerance
        )

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


def kernel_symmetry_audit(
    lattice: ModeLattice,
    sample_count: int,
    seed: int,
    sigma: float,
    radius: float = None
) -> SymmetryAudit:
    """
    Sample alpha_kl(rho), the smeared mode-sum [F+_k, F_l] kernel, on +-rho
    pairs and test the constraints it must satisfy: reality, exchange
    symmetry alpha_kl(rho) = alpha_lk(-rho), odd pseudotensor parity, a pure
    AU part, and an extracted odd vector equal to the smeared delta gradient.

    Args:
        lattice: Mode lattice
        sample_count: Number of +-rho pairs
        seed: Sampling seed
        sigma: Width of both test functions
        radius: Sampling radius, 3 sigma by default

    Returns:
        SymmetryAudit
    """
    radius = 3.0 * sigma if radius is None else radius
    points = random_pm_points(sample_count, seed, radius)
    origin = TestFunction(np.zeros(3), sigma)
    units = lattice.units

    samples = np.stack([
        modesum_matrix(CommutatorPair.Fd_F, lattice, TestFunction(rho, sigma), origin)
        for rho in points
    ])
    scale = 2.0 * smearing_scale(origin, origin, units)

    field = Tensor3x3Field(points=points, samples=samples.real)
    parts = decompose_GU_SA(field)
    total = field.norm()
    au_fraction = parts.AU.norm() / total if total > 0 else 1.0

    vectors = antisym_to_vector(parts.AU.samples)
    expected = np.array([
        [-2.0 * units.commutator_prefactor * smeared_delta_gradient(TestFunction(rho, sigma), origin, s, lattice.box_length)
         for s in (1, 2, 3)]
        for rho in points
    ])

    audit = SymmetryAudit(
        seed=seed,
        sample_count=sample_count,
        cutoff=lattice.k_max,
        sigma=sigma,
        scale=scale,
        imaginary_fraction=float(np.max(np.abs(samples.imag))) / scale,
        exchange_defect=exchange_symmetry_defect(field) / scale,
        parity_defect=pseudotensor_parity_check(field) / scale,
        au_fraction=float(au_fraction),
        vector_error=float(np.max(np.abs(vectors - expected))) / scale,
        vector_oddness=float(np.max(np.abs(vectors + vectors[field.partner]))) / scale,
    )
    logger.debug(f"Kernel symmetry audit: {audit}")
    return audit
