"""Tensor Algebra Module - exhaustive index identities and kernel decompositions"""

from .identities import (
    EPSILON,
    DELTA,
    levi_civita,
    epsilon_contraction_identity_check,
    divergence_absurdity_factor,
    vector_to_antisym,
    antisym_to_vector,
)
from .kernels import (
    Tensor3x3Field,
    GUSADecomposition,
    negation_partners,
    random_pm_points,
    decompose_GU_SA,
    exchange_symmetry_defect,
    pseudotensor_parity_check,
)

__all__ = [
    "EPSILON",
    "DELTA",
    "levi_civita",
    "epsilon_contraction_identity_check",
    "divergence_absurdity_factor",
    "vector_to_antisym",
    "antisym_to_vector",
    "Tensor3x3Field",
    "GUSADecomposition",
    "negation_partners",
    "random_pm_points",
    "decompose_GU_SA",
    "exchange_symmetry_defect",
    "pseudotensor_parity_check",
]
