"""
Smeared Pauli-Jordan function

The free-field commutator function

    D(rho, tau) = -(1 / 4 pi |rho|) [delta(|rho| - c tau) - delta(|rho| + c tau)]

lives on the light cone. Smeared with a Gaussian of width S centred at
separation d (r = |d|, u = c tau) it becomes

    Phi(r, u) = -(A S^2 / 2 r) [gamma(r - u) - gamma(r + u)],
    A = (2 pi S^2)^(-3/2),  gamma(x) = exp(-x^2 / 2 S^2)

with Phi(0, u) = -u A gamma(u). Radial derivatives go through W = r Phi,
which is odd in r; below ``SMALL_R_FRACTION * S`` its Taylor series replaces
the closed form.
"""

from typing import NamedTuple, Optional

import numpy as np
from numpy.polynomial import hermite_e
from scipy import integrate

from src.core.lattice import ModeLattice
from src.core.units import UnitSystem
from .smearing import TestFunction, separation
from src.utils.errors import LightConeError
from src.utils.logger import get_logger

logger = get_logger(__name__)

SMALL_R_FRACTION = 1e-2
LIGHT_CONE_MARGIN = 6.0


class SmearedD(NamedTuple):
    """Smeared D and the derivative combinations the field kernels need"""
    phi: float
    dphi_over_r: float       # Phi' / r
    d2phi: float             # Phi''
    aniso_over_r2: float     # (Phi'' - Phi' / r) / r^2
    dt_phi: float            # d_u Phi
    dt_grad_over_r: float    # (d_u Phi)' / r


def gaussian_derivative(n: int, x, S: float):
    """n-th derivative of exp(-x^2 / 2 S^2)"""
    x = np.asarray(x, dtype=float)
    coefficients = np.zeros(n + 1)
    coefficients[n] = 1.0
    return (-1.0 / S) ** n * hermite_e.hermeval(x / S, coefficients) * np.exp(-x * x / (2.0 * S * S))


def smeared_D(r: float, u: float, S: float) -> SmearedD:
    """
    Closed form of the Gaussian-smeared Pauli-Jordan function.

    Args:
        r: Distance between the smearing centres
        u: c * tau
        S: Combined smearing width

    Returns:
        SmearedD at (r, u)
    """
    r = abs(float(r))
    A = (2.0 * np.pi * S * S) ** -1.5
    scale = A * S * S

    if r < SMALL_R_FRACTION * S:
        W = {n: scale * gaussian_derivative(n, u, S) for n in (1, 3, 5, 7)}
        Y = {n: scale * gaussian_derivative(n + 1, u, S) for n in (1, 3, 5, 7)}
        r2 = r * r
        return SmearedD(
            phi=float(W[1] + W[3] * r2 / 6.0 + W[5] * r2 * r2 / 120.0),
            dphi_over_r=float(W[3] / 3.0 + W[5] * r2 / 30.0 + W[7] * r2 * r2 / 840.0),
            d2phi=float(W[3] / 3.0 + W[5] * r2 / 10.0 + W[7] * r2 * r2 / 168.0),
            aniso_over_r2=float(W[5] / 15.0 + W[7] * r2 / 210.0),
            dt_phi=float(Y[1] + Y[3] * r2 / 6.0 + Y[5] * r2 * r2 / 120.0),
            dt_grad_over_r=float(Y[3] / 3.0 + Y[5] * r2 / 30.0 + Y[7] * r2 * r2 / 840.0),
        )

    def w(n):
        return -0.5 * scale * (gaussian_derivative(n, r - u, S) - gaussian_derivative(n, r + u, S))

    def y(n):
        return 0.5 * scale * (gaussian_derivative(n + 1, r - u, S) + gaussian_derivative(n + 1, r + u, S))

    W0, W1, W2 = w(0), w(1), w(2)
    Y0, Y1 = y(0), y(1)

    phi = W0 / r
    dphi = W1 / r - W0 / r ** 2
    d2phi = W2 / r - 2.0 * W1 / r ** 2 + 2.0 * W0 / r ** 3
    return SmearedD(
        phi=float(phi),
        dphi_over_r=float(dphi / r),
        d2phi=float(d2phi),
        aniso_over_r2=float((d2phi - dphi / r) / r ** 2),
        dt_phi=float(Y0 / r),
        dt_grad_over_r=float(Y1 / r ** 2 - Y0 / r ** 3),
    )


def check_light_cone(tau: float, sigma: float, box_length: float, units: UnitSystem) -> None:
    """Require c |tau| + 6 sigma < L / 2"""
    reach = units.c * abs(tau) + LIGHT_CONE_MARGIN * sigma
    if reach >= 0.5 * box_length:
        raise LightConeError(
            f"Light cone leaves the box: c|tau| + {LIGHT_CONE_MARGIN:g} sigma = {reach:.6g} "
            f">= L/2 = {0.5 * box_length:.6g}"
        )


def pauli_jordan_smeared(
    g: TestFunction,
    tau: float,
    units: UnitSystem = UnitSystem(),
    box_length: Optional[float] = None
) -> float:
    """
    int g(rho) D(rho, tau) d^3rho.

    For g centred at the origin this is -c tau g~(c tau), with g~ the radial
    profile of g: odd in tau and zero at tau = 0.

    Args:
        g: Test function
        tau: Time separation
        units: Supplies c
        box_length: When given, the light cone must fit in the box

    Returns:
        Smeared value
    """
    if box_length is not None:
        g.check_fits(box_length)
        check_light_cone(tau, g.sigma, box_length, units)
    r = float(np.linalg.norm(separation(g, TestFunction(np.zeros(3), g.sigma), box_length)))
    return smeared_D(r, units.c * tau, g.sigma).phi


def pauli_jordan_radial_oracle(g: TestFunction, tau: float, units: UnitSystem = UnitSystem()) -> float:
    """
    Independent value for g centred at the origin from the spectral
    representation -(1 / 2 pi^2) int_0^inf k sin(c k tau) exp(-sigma^2 k^2 / 2) dk.
    """
    sigma = g.sigma
    u = units.c * tau
    upper = 12.0 / sigma
    value, _ = integrate.quad(
        lambda k: k * np.sin(k * u) * np.exp(-0.5 * sigma * sigma * k * k),
        0.0, upper, limit=400, epsabs=1e-12, epsrel=1e-12,
    )
    return float(-value / (2.0 * np.pi ** 2))


def pauli_jordan_modesum(lattice: ModeLattice, g: TestFunction, tau: float) -> float:
    """
    Lattice-regularized smeared D,
    -(1/V) [sum_k exp(-sigma^2 k^2 / 2) cos(k.d) sin(c k tau) / k + c tau].

    The last term is the k = 0 limit, which the transverse lattice omits.
    """
    c = lattice.units.c
    k_norm = lattice.k_norm
    weight = np.exp(-0.5 * g.sigma ** 2 * k_norm ** 2)
    terms = weight * np.cos(lattice.k @ g.center) * np.sin(c * k_norm * tau) / k_norm
    total = np.sum(terms) + c * tau
    return float(-total / lattice.volume)
