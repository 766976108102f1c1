"""
Discrete field transformations P, T, C, D

Every element acts on the complex field as

    F'(r, t') = i^phase * [F or F*](+-r, +-t)

so it is stored in the normal form (phase mod 4, conjugate, invert space,
reverse time). The table on E and B:

    P:  E -> -E(-r),  B ->  B(-r)      F -> -F*(-r, t)
    T:  E ->  E(-t),  B -> -B(-t)      F ->  F*(r, -t)
    C:  E -> -E,      B -> -B          F -> -F
    D:  E -> -B,      B ->  E          F ->  iF

T is the classical time reversal. The quantum rule (no conjugation, carried
by an anti-unitary operator) cannot act on c-number configurations; it
enters the commutator checks as the reality of the equal-time kernel.
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

import numpy as np

from src.core.units import UnitSystem
from src.fields.synthesis import FieldConfiguration, FFT_AXES
from src.maxwell.spectral import MaxwellResidual, maxwell_residual
from src.utils.errors import ValidationError
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class TransformOp:
    """Group element in normal form"""
    phase: int = 0
    conjugate: bool = False
    invert_space: bool = False
    reverse_time: bool = False

    def __post_init__(self):
        object.__setattr__(self, "phase", int(self.phase) % 4)

    def then(self, other: "TransformOp") -> "TransformOp":
        """Apply self first, then other"""
        phase = other.phase + (-self.phase if other.conjugate else self.phase)
        return TransformOp(
            phase=phase,
            conjugate=self.conjugate ^ other.conjugate,
            invert_space=self.invert_space ^ other.invert_space,
            reverse_time=self.reverse_time ^ other.reverse_time,
        )

    @property
    def is_identity(self) -> bool:
        return self == IDENTITY

    def __str__(self) -> str:
        return label(self)


IDENTITY = TransformOp()
P = TransformOp(phase=2, conjugate=True, invert_space=True)
T = TransformOp(phase=0, conjugate=True, reverse_time=True)
C = TransformOp(phase=2)
D = TransformOp(phase=1)

GENERATORS: Dict[str, TransformOp] = {"P": P, "T": T, "C": C, "D": D}


def compose(ops: Iterable[TransformOp]) -> TransformOp:
    """
    Compose a sequence of transformations.

    Args:
        ops: Transformations in application order (first element acts first)

    Returns:
        The product in normal form
    """
    result = IDENTITY
    for op in ops:
        if isinstance(op, str):
            op = parse_op(op)
        result = result.then(op)
    return result


def parse_op(name: str) -> TransformOp:
    """Parse a word such as ``"PD"`` (P first, then D) or ``"identity"``"""
    name = name.strip()
    if name.lower() in ("", "identity", "1"):
        return IDENTITY
    unknown = [ch for ch in name if ch not in GENERATORS]
    if unknown:
        raise ValidationError(f"Unknown transformation symbols {unknown}; use P, T, C, D")
    return compose(GENERATORS[ch] for ch in name)


def _shortest_words() -> Dict[TransformOp, str]:
    words = {IDENTITY: "identity"}
    queue = deque([(IDENTITY, "")])
    while queue:
        op, word = queue.popleft()
        for symbol, generator in GENERATORS.items():
            nxt = op.then(generator)
            if nxt not in words:
                words[nxt] = word + symbol
                queue.append((nxt, word + symbol))
    return words


_LABELS = _shortest_words()
_LABELS[compose([D, D, D])] = "D^3"


def label(op: TransformOp) -> str:
    """Shortest generator word for an element, written in application order"""
    return _LABELS.get(op, f"i^{op.phase}{'*' if op.conjugate else ''}"
                           f"{'(-r)' if op.invert_space else ''}{'(-t)' if op.reverse_time else ''}")


def group_elements() -> Tuple[TransformOp, ...]:
    """All elements generated by P, T, C, D"""
    return tuple(_LABELS)


def _invert_grid(F: np.ndarray) -> np.ndarray:
    """Sample at -r: index i -> (N - i) mod N on each axis"""
    return np.roll(np.flip(F, axis=FFT_AXES), shift=1, axis=FFT_AXES)


def _act(op: TransformOp, F: np.ndarray) -> np.ndarray:
    out = np.conj(F) if op.conjugate else F
    if op.invert_space:
        out = _invert_grid(out)
    return (1j ** op.phase) * out


def apply(op: TransformOp, config: FieldConfiguration) -> FieldConfiguration:
    """
    Transform a configuration.

    Args:
        op: Transformation
        config: Field at time t

    Returns:
        Transformed field, labelled with time -t when op reverses time
    """
    t = -config.t if op.reverse_time else config.t
    return config.with_field(_act(op, config.F), t=t)


def apply_time_derivative(op: TransformOp, dF_dt: np.ndarray) -> np.ndarray:
    """Transform dF/dt consistently with ``apply``; time reversal adds a sign"""
    out = _act(op, np.asarray(dF_dt, dtype=np.complex128))
    return -out if op.reverse_time else out


def invariance_report(
    config: FieldConfiguration,
    dF_dt: np.ndarray,
    op: TransformOp,
    units: Optional[UnitSystem] = None
) -> Tuple[MaxwellResidual, MaxwellResidual]:
    """
    Maxwell residuals before and after a transformation.

    Returns:
        (before, after)
    """
    before = maxwell_residual(config, dF_dt, units)
    after = maxwell_residual(apply(op, config), apply_time_derivative(op, dF_dt), units)
    logger.debug(
        f"Invariance under {label(op)}: curl {before.curl_residual:.3e} -> {after.curl_residual:.3e}, "
        f"div {before.div_residual:.3e} -> {after.div_residual:.3e}"
    )
    return before, after
