"""
Levi-Civita symbol and exhaustive index identities in three dimensions

Public index arguments are 1-based (1, 2, 3); the ``EPSILON`` array is
0-based for use with numpy.einsum.
"""

from itertools import product

import numpy as np

from src.utils.errors import ValidationError
from src.utils.logger import get_logger

logger = get_logger(__name__)

INDICES = (1, 2, 3)


def levi_civita(j: int, k: int, l: int) -> int:
    """
    Totally antisymmetric symbol.

    Args:
        j, k, l: Indices in {1, 2, 3}

    Returns:
        +1 for even permutations of (1, 2, 3), -1 for odd ones, 0 on repeats
    """
    for index in (j, k, l):
        if index not in INDICES:
            raise ValidationError(f"Levi-Civita indices must be in {{1, 2, 3}}, got {(j, k, l)}")
    return (j - k) * (k - l) * (l - j) // 2


def _build_epsilon() -> np.ndarray:
    eps = np.zeros((3, 3, 3), dtype=np.int64)
    for j, k, l in product(INDICES, repeat=3):
        eps[j - 1, k - 1, l - 1] = levi_civita(j, k, l)
    eps.flags.writeable = False
    return eps


EPSILON = _build_epsilon()
DELTA = np.eye(3, dtype=np.int64)


def epsilon_contraction_identity_check() -> int:
    """
    Check eps_jkl eps_jsu = delta_ks delta_lu - delta_ku delta_ls over all
    81 choices of (k, l, s, u).

    Returns:
        Largest absolute deviation (0 when the identity holds)
    """
    lhs = np.einsum("jkl,jsu->klsu", EPSILON, EPSILON)
    rhs = np.einsum("ks,lu->klsu", DELTA, DELTA) - np.einsum("ku,ls->klsu", DELTA, DELTA)
    error = int(np.max(np.abs(lhs - rhs)))
    logger.debug(f"Epsilon contraction identity: max deviation {error}")
    return error


def divergence_absurdity_factor() -> float:
    """
    Contract sum_u (delta_uu delta_ls - delta_us delta_lu) for all (l, s).

    The result is proportional to delta_ls; its factor turns the double-curl
    chain into d_u F_u = 2 d_l F_l, which forces the divergence to vanish.

    Returns:
        The proportionality factor to delta_ls
    """
    trace = np.trace(DELTA)
    contraction = trace * DELTA - np.einsum("us,lu->ls", DELTA, DELTA)

    diagonal = np.diag(contraction)
    off_diagonal = contraction - np.diag(diagonal)
    if np.any(off_diagonal) or np.any(diagonal != diagonal[0]):
        raise ValidationError(f"Contraction is not proportional to delta: {contraction.tolist()}")
    return float(diagonal[0])


def vector_to_antisym(v: np.ndarray) -> np.ndarray:
    """A_kl = eps_kls v_s; accepts (..., 3) and returns (..., 3, 3)"""
    return np.einsum("kls,...s->...kl", EPSILON, np.asarray(v, dtype=float))


def antisym_to_vector(A: np.ndarray, tolerance: float = 1e-12) -> np.ndarray:
    """
    Extract the vector v with A_kl = eps_kls v_s.

    Args:
        A: Antisymmetric matrix, or a stack of them with shape (..., 3, 3)
        tolerance: Allowed symmetric part relative to the norm of A

    Returns:
        v = (1/2) eps_kls A_kl
    """
    A = np.asarray(A, dtype=float)
    if A.shape[-2:] != (3, 3):
        raise ValidationError(f"Expected 3x3 matrices, got shape {A.shape}")
    symmetric = A + np.swapaxes(A, -1, -2)
    if np.linalg.norm(symmetric) > tolerance * max(np.linalg.norm(A), np.finfo(float).tiny):
        raise ValidationError("Matrix is not antisymmetric")
    return 0.5 * np.einsum("kls,...kl->...s", EPSILON, A)
