"""
Transverse mode lattice

Wavevectors k = (2 pi / L) n for integer triples n with 0 < |k| <= k_max
(a sharp spherical cutoff). Each mode carries omega = c |k| and a
right-handed transverse triad (e1, e2, k/|k|):

    e1 = normalize(a x k),  a = z unless |k_hat . z| > 0.9, then a = x
    e2 = k_hat x e1

The k = 0 mode is excluded: there is no transverse field at zero wavevector.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterator, NamedTuple, Tuple

import numpy as np

from src.core.grid import SpatialGrid
from src.core.units import UnitSystem
from src.utils.errors import EmptyLatticeError, ValidationError
from src.utils.logger import get_logger

logger = get_logger(__name__)

TRIAD_TOLERANCE = 1e-12


class Mode(NamedTuple):
    """One lattice mode"""
    n: Tuple[int, int, int]
    k: np.ndarray
    omega: float
    e1: np.ndarray
    e2: np.ndarray


@dataclass(frozen=True, eq=False)
class ModeLattice:
    """Vectorized mode table; row m of every array describes mode m"""
    box_length: float
    k_max: float
    units: UnitSystem
    n: np.ndarray       # (M, 3) integers
    k: np.ndarray       # (M, 3)
    omega: np.ndarray   # (M,)
    e1: np.ndarray      # (M, 3)
    e2: np.ndarray      # (M, 3)
    _index: Dict[Tuple[int, int, int], int] = field(default=None, repr=False)

    def __post_init__(self):
        for arr in (self.n, self.k, self.omega, self.e1, self.e2):
            arr.flags.writeable = False
        index = {tuple(int(v) for v in row): i for i, row in enumerate(self.n)}
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return self.n.shape[0]

    def __iter__(self) -> Iterator[Mode]:
        for i in range(len(self)):
            yield self.mode(i)

    def mode(self, i: int) -> Mode:
        return Mode(
            n=tuple(int(v) for v in self.n[i]),
            k=self.k[i],
            omega=float(self.omega[i]),
            e1=self.e1[i],
            e2=self.e2[i],
        )

    @property
    def volume(self) -> float:
        return self.box_length ** 3

    @property
    def k_norm(self) -> np.ndarray:
        return self.omega / self.units.c

    @property
    def k_hat(self) -> np.ndarray:
        return self.k / self.k_norm[:, None]

    @property
    def b1(self) -> np.ndarray:
        """k_hat x e1 = e2: magnetic direction of polarization 1"""
        return self.e2

    @property
    def b2(self) -> np.ndarray:
        """k_hat x e2 = -e1: magnetic direction of polarization 2"""
        return -self.e1

    def index_of(self, n) -> int:
        """Row index of integer triple n, or -1 if absent"""
        return self._index.get(tuple(int(v) for v in n), -1)

    def polarizations(self) -> np.ndarray:
        """Electric polarization vectors, shape (M, 2, 3)"""
        return np.stack([self.e1, self.e2], axis=1)

    def magnetic_polarizations(self) -> np.ndarray:
        """Magnetic directions k_hat x e_lambda, shape (M, 2, 3)"""
        return np.stack([self.b1, self.b2], axis=1)

    def compatible_with(self, grid: SpatialGrid) -> bool:
        return np.isclose(self.box_length, grid.box_length, rtol=1e-14, atol=0.0)


def polarization_triads(k: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Deterministic transverse polarization pair for each wavevector.

    Args:
        k: Wavevectors, shape (M, 3), none zero

    Returns:
        (e1, e2), each of shape (M, 3)
    """
    k_hat = k / np.linalg.norm(k, axis=1)[:, None]
    reference = np.zeros_like(k_hat)
    near_z = np.abs(k_hat[:, 2]) > 0.9
    reference[~near_z, 2] = 1.0
    reference[near_z, 0] = 1.0

    e1 = np.cross(reference, k)
    e1 /= np.linalg.norm(e1, axis=1)[:, None]
    e2 = np.cross(k_hat, e1)
    return e1, e2


def triad_defect(lattice: ModeLattice) -> float:
    """Largest violation of transversality, orthonormality and right-handedness"""
    k_hat = lattice.k_hat
    e1, e2 = lattice.e1, lattice.e2
    checks = [
        np.abs(np.einsum("mi,mi->m", k_hat, e1)),
        np.abs(np.einsum("mi,mi->m", k_hat, e2)),
        np.abs(np.einsum("mi,mi->m", e1, e1) - 1.0),
        np.abs(np.einsum("mi,mi->m", e2, e2) - 1.0),
        np.abs(np.einsum("mi,mi->m", e1, e2)),
        np.abs(np.cross(e1, e2) - k_hat).max(axis=1),
    ]
    return float(max(c.max() for c in checks))


def build_mode_lattice(
    grid: SpatialGrid,
    k_max: float,
    units: UnitSystem = UnitSystem()
) -> ModeLattice:
    """
    Enumerate all nonzero lattice wavevectors inside the spherical cutoff.

    Args:
        grid: Grid fixing the box length
        k_max: Cutoff wavenumber
        units: hbar and c

    Returns:
        ModeLattice, ordered lexicographically in n
    """
    step = 2.0 * np.pi / grid.box_length
    if not k_max >= step:
        raise EmptyLatticeError(
            f"empty lattice: k_max={k_max} is below the smallest nonzero mode {step:.6g}"
        )

    n_max = int(np.floor(k_max / step))
    r = np.arange(-n_max, n_max + 1)
    n = np.stack(np.meshgrid(r, r, r, indexing="ij"), axis=-1).reshape(-1, 3)
    n_sq = np.einsum("mi,mi->m", n, n)
    keep = (n_sq > 0) & (n_sq * step * step <= k_max * k_max * (1.0 + 1e-14))
    n = n[keep]

    k = n * step
    k_norm = np.linalg.norm(k, axis=1)
    e1, e2 = polarization_triads(k)

    lattice = ModeLattice(
        box_length=grid.box_length,
        k_max=float(k_max),
        units=units,
        n=n.astype(np.int64),
        k=k,
        omega=units.c * k_norm,
        e1=e1,
        e2=e2,
    )

    defect = triad_defect(lattice)
    if defect > TRIAD_TOLERANCE:
        raise ValidationError(f"Polarization triads violate orthonormality by {defect:.3e}")

    logger.debug(f"Mode lattice built: k_max={k_max:.6g}, {len(lattice)} modes")
    return lattice
