"""Fields Module - mode amplitudes and synthesis of F = E + iB"""

from .amplitudes import (
    ModeAmplitudes,
    plane_wave,
    random_amplitudes,
    format_amplitudes,
    parse_amplitudes,
    save_amplitudes,
    load_amplitudes,
)
from .synthesis import (
    FieldConfiguration,
    FFT_SIGN,
    FFT_NORM,
    forward_transform,
    inverse_transform,
    mode_normalization,
    phase_factors,
    synthesize,
    to_EB,
    from_EB,
    time_derivative,
    finite_difference_time_derivative,
    add_longitudinal,
    check_translation_generation,
)

__all__ = [
    "ModeAmplitudes",
    "plane_wave",
    "random_amplitudes",
    "format_amplitudes",
    "parse_amplitudes",
    "save_amplitudes",
    "load_amplitudes",
    "FieldConfiguration",
    "FFT_SIGN",
    "FFT_NORM",
    "forward_transform",
    "inverse_transform",
    "mode_normalization",
    "phase_factors",
    "synthesize",
    "to_EB",
    "from_EB",
    "time_derivative",
    "finite_difference_time_derivative",
    "add_longitudinal",
    "check_translation_generation",
]
