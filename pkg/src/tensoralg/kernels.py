"""
Tensor kernels sampled on point sets closed under negation

A kernel alpha_kl(rho) is split into even (G) or odd (U) behaviour under
rho -> -rho, and symmetric (S) or antisymmetric (A) behaviour under k <-> l.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.spatial import cKDTree

from src.utils.errors import ValidationError
from src.utils.logger import get_logger

logger = get_logger(__name__)

PARTNER_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class Tensor3x3Field:
    """3x3 samples alpha_kl(rho) over a point set containing -rho for every rho"""
    points: np.ndarray   # (P, 3)
    samples: np.ndarray  # (P, 3, 3)
    partner: np.ndarray = None  # partner[i] is the index of -points[i]

    def __post_init__(self):
        points = np.asarray(self.points, dtype=float)
        samples = np.asarray(self.samples)
        if points.ndim != 2 or points.shape[1] != 3:
            raise ValidationError(f"Points must have shape (P, 3), got {points.shape}")
        if samples.shape != (points.shape[0], 3, 3):
            raise ValidationError(
                f"Samples must have shape ({points.shape[0]}, 3, 3), got {samples.shape}"
            )
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "samples", samples)
        if self.partner is None:
            object.__setattr__(self, "partner", negation_partners(points))

    def __len__(self) -> int:
        return self.points.shape[0]

    def with_samples(self, samples: np.ndarray) -> "Tensor3x3Field":
        return Tensor3x3Field(points=self.points, samples=samples, partner=self.partner)

    def reflected(self) -> np.ndarray:
        """alpha(-rho) at every point"""
        return self.samples[self.partner]

    def norm(self) -> float:
        return float(np.linalg.norm(self.samples))


class GUSADecomposition(NamedTuple):
    SG: Tensor3x3Field
    AG: Tensor3x3Field
    SU: Tensor3x3Field
    AU: Tensor3x3Field


def negation_partners(points: np.ndarray) -> np.ndarray:
    """
    Index of -rho for every rho.

    Raises:
        ValidationError: if some -rho is missing from the set
    """
    if len(points) == 0:
        return np.zeros(0, dtype=np.int64)
    scale = max(float(np.max(np.abs(points))), 1.0)
    distance, index = cKDTree(points).query(-points)
    missing = np.flatnonzero(distance > PARTNER_TOLERANCE * scale)
    if missing.size:
        raise ValidationError(
            f"Point set is not closed under negation: {missing.size} points lack a partner, "
            f"first {points[missing[0]].tolist()}"
        )
    return index


def random_pm_points(count: int, seed: int, radius: float = 1.0) -> np.ndarray:
    """``count`` deterministic points in a ball followed by their negatives"""
    rng = np.random.default_rng(seed)
    direction = rng.normal(size=(count, 3))
    direction /= np.linalg.norm(direction, axis=1)[:, None]
    r = radius * rng.uniform(0.1, 1.0, size=count) ** (1.0 / 3.0)
    points = direction * r[:, None]
    return np.concatenate([points, -points])


def decompose_GU_SA(field: Tensor3x3Field) -> GUSADecomposition:
    """
    Split a kernel into its four parity/exchange parts.

    Returns:
        GUSADecomposition whose four parts sum to the input
    """
    alpha = field.samples
    reflected = field.reflected()
    even = 0.5 * (alpha + reflected)
    odd = 0.5 * (alpha - reflected)

    def split(part):
        transposed = np.swapaxes(part, -1, -2)
        return 0.5 * (part + transposed), 0.5 * (part - transposed)

    SG, AG = split(even)
    SU, AU = split(odd)
    return GUSADecomposition(
        SG=field.with_samples(SG),
        AG=field.with_samples(AG),
        SU=field.with_samples(SU),
        AU=field.with_samples(AU),
    )


def exchange_symmetry_defect(field: Tensor3x3Field) -> float:
    """max |alpha_kl(rho) - alpha_lk(-rho)|"""
    if len(field) == 0:
        return 0.0
    return float(np.max(np.abs(field.samples - np.swapaxes(field.reflected(), -1, -2))))


def pseudotensor_parity_check(field: Tensor3x3Field) -> float:
    """
    Parity defect of a kernel expected to be an odd pseudotensor.

    Defined as the larger of two defects:

        exchange:  max |alpha_kl(rho) - alpha_lk(-rho)|   (exchange_symmetry_defect)
        oddness:   max |alpha_kl(rho) + alpha_kl(-rho)|

    The pseudotensor rule with intrinsic parity -1 on its own is only the
    exchange term, which vanishes for any symmetric even kernel such as
    b*delta. The oddness term flags those: b*delta gives 2|b| here while its
    exchange defect is 0.

    Returns:
        Largest violation over samples and components
    """
    if len(field) == 0:
        return 0.0
    odd_defect = float(np.max(np.abs(field.samples + field.reflected())))
    return max(exchange_symmetry_defect(field), odd_defect)
