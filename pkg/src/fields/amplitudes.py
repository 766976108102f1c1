"""
Mode amplitudes - a classical (coherent) field state in mode space

``amp[m, lam]`` is the complex amplitude of lattice mode ``m`` with
polarization ``lam`` (0 for e1, 1 for e2). Text serialization uses one line
per nonzero entry: ``nx ny nz lambda re im`` with lambda in {1, 2}.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import List, Tuple, Union

import numpy as np

from src.core.lattice import ModeLattice
from src.utils.errors import ValidationError
from src.utils.logger import get_logger

logger = get_logger(__name__)

Number = Union[int, float, complex]


@dataclass(frozen=True, eq=False)
class ModeAmplitudes:
    """Complex amplitude per (mode, polarization) over a ModeLattice"""
    lattice: ModeLattice
    amp: np.ndarray  # (M, 2) complex

    def __post_init__(self):
        amp = np.array(self.amp, dtype=np.complex128)
        if amp.shape != (len(self.lattice), 2):
            raise ValidationError(
                f"Amplitude array must have shape ({len(self.lattice)}, 2), got {amp.shape}"
            )
        amp.flags.writeable = False
        object.__setattr__(self, "amp", amp)

    @classmethod
    def zeros(cls, lattice: ModeLattice) -> "ModeAmplitudes":
        return cls(lattice, np.zeros((len(lattice), 2), dtype=np.complex128))

    def _check_same_lattice(self, other: "ModeAmplitudes") -> None:
        if other.lattice is not self.lattice and (
            len(other.lattice) != len(self.lattice)
            or not np.array_equal(other.lattice.n, self.lattice.n)
            or other.lattice.box_length != self.lattice.box_length
        ):
            raise ValidationError("Amplitude sets are defined on different lattices")

    def __add__(self, other: "ModeAmplitudes") -> "ModeAmplitudes":
        self._check_same_lattice(other)
        return ModeAmplitudes(self.lattice, self.amp + other.amp)

    def __sub__(self, other: "ModeAmplitudes") -> "ModeAmplitudes":
        self._check_same_lattice(other)
        return ModeAmplitudes(self.lattice, self.amp - other.amp)

    def __neg__(self) -> "ModeAmplitudes":
        return ModeAmplitudes(self.lattice, -self.amp)

    def __mul__(self, factor: Number) -> "ModeAmplitudes":
        return ModeAmplitudes(self.lattice, self.amp * factor)

    __rmul__ = __mul__

    def scaled_per_mode(self, factors: np.ndarray) -> "ModeAmplitudes":
        """Multiply mode m (both polarizations) by factors[m]"""
        return ModeAmplitudes(self.lattice, self.amp * np.asarray(factors)[:, None])

    def nonzero(self) -> List[Tuple[Tuple[int, int, int], int, complex]]:
        """Nonzero entries as (n, lambda in {1, 2}, amplitude)"""
        rows, cols = np.nonzero(self.amp)
        return [
            (tuple(int(v) for v in self.lattice.n[m]), int(lam) + 1, complex(self.amp[m, lam]))
            for m, lam in zip(rows, cols)
        ]


def _polarization_index(lam: int) -> int:
    if lam not in (1, 2):
        raise ValidationError(f"Polarization must be 1 or 2, got {lam}")
    return lam - 1


def plane_wave(lattice: ModeLattice, k, lam: int, amplitude: Number) -> ModeAmplitudes:
    """
    Single-entry amplitude set.

    Args:
        lattice: Mode lattice
        k: Wavevector, must be a lattice point
        lam: Polarization 1 or 2
        amplitude: Complex amplitude

    Returns:
        ModeAmplitudes with one nonzero entry
    """
    k = np.asarray(k, dtype=float)
    step = 2.0 * np.pi / lattice.box_length
    n = np.rint(k / step)
    m = lattice.index_of(n)

    if m < 0 or np.max(np.abs(n * step - k)) > 1e-9 * max(step, np.linalg.norm(k)):
        nearest = lattice.k[np.argmin(np.linalg.norm(lattice.k - k, axis=1))]
        raise ValidationError(
            f"Wavevector {k.tolist()} is not on the lattice; nearest valid wavevector is "
            f"{np.round(nearest, 12).tolist()}"
        )

    amp = np.zeros((len(lattice), 2), dtype=np.complex128)
    amp[m, _polarization_index(lam)] = amplitude
    return ModeAmplitudes(lattice, amp)


def random_amplitudes(lattice: ModeLattice, count: int, seed: int) -> ModeAmplitudes:
    """Deterministic random state with ``count`` occupied (mode, polarization) entries"""
    rng = np.random.default_rng(seed)
    count = min(count, 2 * len(lattice))
    flat = rng.choice(2 * len(lattice), size=count, replace=False)
    amp = np.zeros(2 * len(lattice), dtype=np.complex128)
    amp[flat] = rng.normal(size=count) + 1j * rng.normal(size=count)
    return ModeAmplitudes(lattice, amp.reshape(len(lattice), 2))


def format_amplitudes(modes: ModeAmplitudes) -> str:
    lines = [
        f"{n[0]} {n[1]} {n[2]} {lam} {a.real:.17e} {a.imag:.17e}"
        for n, lam, a in modes.nonzero()
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_amplitudes(text: str, lattice: ModeLattice) -> ModeAmplitudes:
    """Parse the ``nx ny nz lambda re im`` text format; repeated entries add up"""
    amp = np.zeros((len(lattice), 2), dtype=np.complex128)
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 6:
            raise ValidationError(f"Line {number}: expected 'nx ny nz lambda re im', got '{line}'")
        try:
            n = tuple(int(p) for p in parts[:3])
            lam = int(parts[3])
            value = complex(float(parts[4]), float(parts[5]))
        except ValueError as e:
            raise ValidationError(f"Line {number}: {e}") from e
        m = lattice.index_of(n)
        if m < 0:
            raise ValidationError(f"Line {number}: mode {n} is not on the lattice")
        amp[m, _polarization_index(lam)] += value
    return ModeAmplitudes(lattice, amp)


def save_amplitudes(modes: ModeAmplitudes, path: str) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Path(path).write_text(format_amplitudes(modes), encoding="utf-8")
    logger.info(f"Saved {len(modes.nonzero())} amplitude entries to {path}")


def load_amplitudes(path: str, lattice: ModeLattice) -> ModeAmplitudes:
    modes = parse_amplitudes(Path(path).read_text(encoding="utf-8"), lattice)
    logger.info(f"Loaded {len(modes.nonzero())} amplitude entries from {path}")
    return modes
