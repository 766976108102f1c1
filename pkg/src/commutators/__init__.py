"""Commutators Module - smeared commutator kernels of the quantized free field"""

from .smearing import (
    TestFunction,
    combined_width,
    separation,
    gaussian_overlap,
    smeared_delta_gradient,
    smeared_delta_gradient_quadrature,
    smearing_scale,
)
from .pauli_jordan import (
    SmearedD,
    smeared_D,
    check_light_cone,
    pauli_jordan_smeared,
    pauli_jordan_radial_oracle,
    pauli_jordan_modesum,
)
from .kernels import (
    ANALYTIC,
    MODESUM,
    CommutatorPair,
    CommutatorSpec,
    KernelValue,
    commutator_scale,
    implied_commutator_prefactor,
    mode_coefficients,
    analytic_matrix,
    modesum_matrix,
    equal_time_commutator,
    unequal_time_commutator,
    CSV_FIELDS,
    write_kernel_values,
)
from .consistency import (
    MTensorReport,
    SymmetryAudit,
    kernel_convolution,
    m_tensor_check,
    generator_identity_check,
    kernel_symmetry_audit,
)

__all__ = [
    "TestFunction",
    "combined_width",
    "separation",
    "gaussian_overlap",
    "smeared_delta_gradient",
    "smeared_delta_gradient_quadrature",
    "smearing_scale",
    "SmearedD",
    "smeared_D",
    "check_light_cone",
    "pauli_jordan_smeared",
    "pauli_jordan_radial_oracle",
    "pauli_jordan_modesum",
    "ANALYTIC",
    "MODESUM",
    "CommutatorPair",
    "CommutatorSpec",
    "KernelValue",
    "commutator_scale",
    "implied_commutator_prefactor",
    "mode_coefficients",
    "analytic_matrix",
    "modesum_matrix",
    "equal_time_commutator",
    "unequal_time_commutator",
    "CSV_FIELDS",
    "write_kernel_values",
    "MTensorReport",
    "SymmetryAudit",
    "kernel_convolution",
    "m_tensor_check",
    "generator_identity_check",
    "kernel_symmetry_audit",
]
