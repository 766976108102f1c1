"""
Smeared commutator kernels of the quantized free field

Two independent routes evaluate int int f(r') g(r) [A_k(r', t'), B_l(r, t)]:

analytic
    Closed forms built on the smeared delta gradient (equal times) and the
    smeared Pauli-Jordan function (unequal times):

        [E_k, B_l]   = -i 4 pi hbar c eps_kls d_s' delta
        [F+_k, F_l]  =  8 pi hbar c eps_kls d_s' delta
        [E_k, E_l]   = [B_k, B_l] = i 4 pi hbar c (d_k d_l - delta_kl d_u^2) D
        [E_k, B_l]   = i 4 pi hbar c eps_kls d_s d_u D
        [F+_k, F_l]  = 2 [E_k, E_l] + 2i [E_k, B_l]
        [F_k, F_l]   = [F+_k, F+_l] = 0

    with u = c tau and derivatives taken in rho = r' - r.

modesum
    Each field is linear in the mode operators,
    A(r) = sum u_A a exp(i k.r) + v_A a+ exp(-i k.r), so the commutator is the
    c-number sum over modes of u_A v_B exp(i phi) - v_A u_B exp(-i phi) with
    phi = k.d - omega tau, weighted by the Gaussian transforms of f and g.
"""

import csv
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Dict, Iterable, Optional, Tuple

import numpy as np

from src.core.lattice import ModeLattice
from src.core.units import UnitSystem
from src.fields.synthesis import mode_normalization
from src.tensoralg.identities import EPSILON
from .pauli_jordan import check_light_cone, smeared_D
from .smearing import (
    TestFunction,
    combined_width,
    separation,
    smeared_delta_gradient,
    smearing_scale,
)
from src.utils.errors import ValidationError
from src.utils.logger import get_logger

logger = get_logger(__name__)

ANALYTIC = "analytic"
MODESUM = "modesum"
METHODS = (ANALYTIC, MODESUM)


class CommutatorPair(str, Enum):
    """Field pair; Fd is the adjoint field F+ = E - iB"""
    F_F = "F_F"
    Fd_Fd = "Fd_Fd"
    Fd_F = "Fd_F"
    E_E = "E_E"
    B_B = "B_B"
    E_B = "E_B"

    @property
    def fields(self) -> Tuple[str, str]:
        first, second = self.value.split("_")
        return first, second

    @property
    def same_type(self) -> bool:
        return self in (CommutatorPair.F_F, CommutatorPair.Fd_Fd, CommutatorPair.E_E, CommutatorPair.B_B)


@dataclass(frozen=True, eq=False)
class CommutatorSpec:
    """
    One smeared commutator: pair, component indices (1-based), time
    separation tau = t' - t, f attached to the first field and g to the second.
    """
    pair: CommutatorPair
    k: int
    l: int
    tau: float
    f: TestFunction
    g: TestFunction

    def __post_init__(self):
        try:
            object.__setattr__(self, "pair", CommutatorPair(self.pair))
        except ValueError as e:
            raise ValidationError(f"Unknown commutator pair {self.pair!r}") from e
        for name in ("k", "l"):
            if getattr(self, name) not in (1, 2, 3):
                raise ValidationError(f"Index {name} must be 1, 2 or 3, got {getattr(self, name)}")
        object.__setattr__(self, "tau", float(self.tau))

    def with_pair(self, pair) -> "CommutatorSpec":
        return CommutatorSpec(pair=pair, k=self.k, l=self.l, tau=self.tau, f=self.f, g=self.g)

    def with_indices(self, k: int, l: int) -> "CommutatorSpec":
        return CommutatorSpec(pair=self.pair, k=k, l=l, tau=self.tau, f=self.f, g=self.g)


@dataclass(frozen=True)
class KernelValue:
    value: complex
    method: str
    cutoff: Optional[float] = None
    spec: Optional[CommutatorSpec] = None


def commutator_scale(spec: CommutatorSpec, units: UnitSystem = UnitSystem()) -> float:
    """Natural magnitude of the smeared kernels for this pair of test functions"""
    return smearing_scale(spec.f, spec.g, units)


def implied_commutator_prefactor(lattice: ModeLattice) -> np.ndarray:
    """2 N_k^2 V / |k| per mode; the energy normalization predicts 4 pi hbar c"""
    return 2.0 * mode_normalization(lattice) ** 2 * lattice.volume / lattice.k_norm


def mode_coefficients(lattice: ModeLattice, field: str) -> Tuple[np.ndarray, np.ndarray]:
    """
    Coefficients (u, v) of a exp(i k.r) and a+ exp(-i k.r) in a field.

    Args:
        lattice: Mode lattice
        field: One of E, B, F, Fd

    Returns:
        (u, v), each of shape (M, 2, 3)
    """
    e = lattice.polarizations()
    b = lattice.magnetic_polarizations()
    directions = {"E": e, "B": b, "F": e + 1j * b, "Fd": e - 1j * b}
    if field not in directions:
        raise ValidationError(f"Unknown field {field!r}")
    u = 1j * mode_normalization(lattice)[:, None, None] * directions[field]
    return u, -u


def _check_box(spec: CommutatorSpec, box_length: Optional[float], units: UnitSystem) -> None:
    if box_length is None:
        return
    spec.f.check_fits(box_length)
    spec.g.check_fits(box_length)
    if spec.tau != 0.0:
        check_light_cone(spec.tau, max(spec.f.sigma, spec.g.sigma), box_length, units)


def analytic_matrix(
    pair: CommutatorPair,
    f: TestFunction,
    g: TestFunction,
    tau: float = 0.0,
    units: UnitSystem = UnitSystem(),
    box_length: Optional[float] = None
) -> np.ndarray:
    """
    Closed-form smeared kernel for all nine (k, l).

    Returns:
        Complex array of shape (3, 3), indexed [k - 1, l - 1]
    """
    pair = CommutatorPair(pair)
    prefactor = units.commutator_prefactor
    if pair in (CommutatorPair.F_F, CommutatorPair.Fd_Fd):
        return np.zeros((3, 3), dtype=np.complex128)

    d = separation(f, g, box_length)

    if tau == 0.0:
        if pair in (CommutatorPair.E_E, CommutatorPair.B_B):
            return np.zeros((3, 3), dtype=np.complex128)
        G = np.array([smeared_delta_gradient(f, g, s, box_length) for s in (1, 2, 3)])
        antisym = np.einsum("kls,s->kl", EPSILON, G)
        if pair is CommutatorPair.E_B:
            return 1j * prefactor * antisym.astype(np.complex128)
        return (-2.0 * prefactor * antisym).astype(np.complex128)

    D = smeared_D(np.linalg.norm(d), units.c * tau, combined_width(f, g))
    EE = 1j * prefactor * (D.aniso_over_r2 * np.outer(d, d) - (D.d2phi + D.dphi_over_r) * np.eye(3))
    EB = 1j * prefactor * np.einsum("kls,s->kl", EPSILON, d) * D.dt_grad_over_r

    if pair in (CommutatorPair.E_E, CommutatorPair.B_B):
        return EE
    if pair is CommutatorPair.E_B:
        return EB
    return 2.0 * EE + 2.0j * EB


def modesum_matrix(
    pair: CommutatorPair,
    lattice: ModeLattice,
    f: TestFunction,
    g: TestFunction,
    tau: float = 0.0
) -> np.ndarray:
    """
    Mode-sum smeared kernel for all nine (k, l).

    Returns:
        Complex array of shape (3, 3), indexed [k - 1, l - 1]
    """
    first, second = CommutatorPair(pair).fields
    u_a, v_a = mode_coefficients(lattice, first)
    u_b, v_b = mode_coefficients(lattice, second)

    k_norm = lattice.k_norm
    d = f.center - g.center
    weight = np.exp(-0.5 * (f.sigma ** 2 + g.sigma ** 2) * k_norm ** 2)
    phase = np.exp(1j * (lattice.k @ d - lattice.omega * tau))

    forward = np.einsum("mpa,mpb->mab", u_a, v_b)
    backward = np.einsum("mpa,mpb->mab", v_a, u_b)
    terms = weight[:, None, None] * (forward * phase[:, None, None] - backward * np.conj(phase)[:, None, None])
    return np.sum(terms, axis=0)


def _evaluate(
    spec: CommutatorSpec,
    method: str,
    lattice: Optional[ModeLattice],
    units: Optional[UnitSystem],
    box_length: Optional[float],
    tau: float
) -> KernelValue:
    if method not in METHODS:
        raise ValidationError(f"Unknown method {method!r}; use one of {', '.join(METHODS)}")

    if method == MODESUM:
        if lattice is None:
            raise ValidationError("The modesum method needs a mode lattice")
        units = lattice.units
        box_length = lattice.box_length if box_length is None else box_length
        _check_box(spec, box_length, units)
        matrix = modesum_matrix(spec.pair, lattice, spec.f, spec.g, tau)
        cutoff = lattice.k_max
    else:
        units = units or (lattice.units if lattice is not None else UnitSystem())
        _check_box(spec, box_length, units)
        matrix = analytic_matrix(spec.pair, spec.f, spec.g, tau, units, box_length)
        cutoff = None

    return KernelValue(
        value=complex(matrix[spec.k - 1, spec.l - 1]),
        method=method,
        cutoff=cutoff,
        spec=spec,
    )


def equal_time_commutator(
    spec: CommutatorSpec,
    method: str = ANALYTIC,
    lattice: Optional[ModeLattice] = None,
    units: Optional[UnitSystem] = None,
    box_length: Optional[float] = None
) -> KernelValue:
    """
    Smeared equal-time commutator.

    Args:
        spec: Commutator specification; its tau must be 0
        method: ``analytic`` or ``modesum``
        lattice: Mode lattice (modesum only; also supplies units and box)
        units: hbar and c for the analytic route
        box_length: Box for width checks and periodic separations

    Returns:
        KernelValue
    """
    if spec.tau != 0.0:
        raise ValidationError(f"Equal-time commutator needs tau = 0, got {spec.tau}")
    return _evaluate(spec, method, lattice, units, box_length, 0.0)


def unequal_time_commutator(
    spec: CommutatorSpec,
    method: str = ANALYTIC,
    lattice: Optional[ModeLattice] = None,
    units: Optional[UnitSystem] = None,
    box_length: Optional[float] = None
) -> KernelValue:
    """
    Smeared commutator at time separation spec.tau.

    At tau = 0 the analytic route is the equal-time closed form exactly.
    With a box, the light cone c|tau| + 6 sigma must stay inside L/2.
    """
    if spec.tau == 0.0:
        return equal_time_commutator(spec, method, lattice, units, box_length)
    return _evaluate(spec, method, lattice, units, box_length, spec.tau)


CSV_FIELDS = (
    "pair", "k", "l", "tau", "sigma1", "sigma2", "separation",
    "method", "cutoff", "value_re", "value_im",
)


def kernel_value_row(value: KernelValue) -> Dict[str, object]:
    spec = value.spec
    if spec is None:
        raise ValidationError("Kernel value carries no specification to export")
    return {
        "pair": spec.pair.value,
        "k": spec.k,
        "l": spec.l,
        "tau": repr(spec.tau),
        "sigma1": repr(spec.f.sigma),
        "sigma2": repr(spec.g.sigma),
        "separation": repr(float(np.linalg.norm(spec.f.center - spec.g.center))),
        "method": value.method,
        "cutoff": "" if value.cutoff is None else repr(value.cutoff),
        "value_re": repr(value.value.real),
        "value_im": repr(value.value.imag),
    }


def write_kernel_values(values: Iterable[KernelValue], path: str) -> int:
    """Write kernel values as CSV rows; returns the number of rows"""
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=CSV_FIELDS)
        writer.writeheader()
        for value in values:
            writer.writerow(kernel_value_row(value))
            count += 1
    logger.info(f"Wrote {count} kernel values to {path}")
    return count
