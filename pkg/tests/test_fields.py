"""
Tests for Fields Module
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.core import build_grid, build_mode_lattice
from src.fields import (
    ModeAmplitudes,
    add_longitudinal,
    check_translation_generation,
    finite_difference_time_derivative,
    format_amplitudes,
    load_amplitudes,
    mode_normalization,
    parse_amplitudes,
    plane_wave,
    random_amplitudes,
    save_amplitudes,
    synthesize,
    time_derivative,
    to_EB,
)
from src.utils.errors import AliasingError, ValidationError


class TestModeAmplitudes:
    """Tests for ModeAmplitudes"""

    def test_shape_validation(self, field_lattice):
        """Test amplitude array shape is enforced"""
        with pytest.raises(ValidationError):
            ModeAmplitudes(field_lattice, np.zeros((len(field_lattice), 3)))

    def test_linear_operations(self, field_lattice):
        """Test addition and scaling"""
        a = random_amplitudes(field_lattice, 5, seed=1)
        b = random_amplitudes(field_lattice, 5, seed=2)

        assert np.allclose((a + b).amp, a.amp + b.amp)
        assert np.allclose((a - b).amp, a.amp - b.amp)
        assert np.allclose((2j * a).amp, 2j * a.amp)
        assert np.allclose((-a).amp, -a.amp)

    def test_random_is_deterministic(self, field_lattice):
        """Test same seed gives the same state"""
        a = random_amplitudes(field_lattice, 8, seed=3)
        b = random_amplitudes(field_lattice, 8, seed=3)

        assert np.array_equal(a.amp, b.amp)
        assert len(a.nonzero()) == 8

    def test_plane_wave_single_entry(self, field_lattice):
        """Test plane wave has one nonzero entry"""
        modes = plane_wave(field_lattice, [0.0, 2.0 * np.pi, 0.0], 2, 1.5 - 0.5j)
        assert modes.nonzero() == [((0, 1, 0), 2, 1.5 - 0.5j)]

    def test_plane_wave_off_lattice(self, field_lattice):
        """Test wavevector not on the lattice names the nearest valid one"""
        with pytest.raises(ValidationError, match="nearest valid wavevector"):
            plane_wave(field_lattice, [1.0, 0.0, 0.0], 1, 1.0)

    def test_plane_wave_bad_polarization(self, field_lattice):
        """Test polarization must be 1 or 2"""
        with pytest.raises(ValidationError):
            plane_wave(field_lattice, [2.0 * np.pi, 0.0, 0.0], 3, 1.0)


class TestAmplitudeText:
    """Tests for the amplitude text format"""

    def test_save_and_load(self, field_lattice, tmp_path):
        """Test a saved state loads back unchanged"""
        modes = random_amplitudes(field_lattice, 6, seed=11)
        path = tmp_path / "state.txt"

        save_amplitudes(modes, str(path))
        loaded = load_amplitudes(str(path), field_lattice)

        assert np.array_equal(loaded.amp, modes.amp)

    def test_repeated_entries_add(self, field_lattice):
        """Test duplicate lines accumulate"""
        text = "1 0 0 1 1.0 0.0\n1 0 0 1 0.5 2.0  # same mode\n"
        modes = parse_amplitudes(text, field_lattice)
        assert modes.nonzero() == [((1, 0, 0), 1, 1.5 + 2.0j)]

    def test_format_line_layout(self, field_lattice):
        """Test one line per nonzero entry"""
        modes = plane_wave(field_lattice, [0.0, 0.0, -2.0 * np.pi], 1, 2.0)
        fields = format_amplitudes(modes).split()

        assert fields[:4] == ["0", "0", "-1", "1"]
        assert float(fields[4]) == 2.0

    @pytest.mark.parametrize("text", ["1 0 0 1 1.0", "1 0 0 1 x 0.0", "0 0 0 1 1.0 0.0", "1 0 0 3 1.0 0.0"])
    def test_malformed_lines(self, field_lattice, text):
        """Test malformed or off-lattice lines"""
        with pytest.raises(ValidationError):
            parse_amplitudes(text, field_lattice)


class TestSynthesis:
    """Tests for field synthesis on the grid"""

    def test_normalization(self, field_lattice):
        """Test N = sqrt(2 pi hbar omega / V)"""
        expected = np.sqrt(2.0 * np.pi * field_lattice.omega / field_lattice.volume)
        assert np.allclose(mode_normalization(field_lattice), expected)

    def test_plane_wave_profile(self, grid, field_lattice):
        """Test E and B of a unit plane wave along x"""
        modes = plane_wave(field_lattice, [2.0 * np.pi, 0.0, 0.0], 1, 1.0)
        E, B = to_EB(synthesize(modes, grid))
        x = grid.coordinates()[0]

        # e1 = y and k_hat x e1 = z for k along x; N = 2 pi
        expected = -4.0 * np.pi * np.sin(2.0 * np.pi * x)
        assert np.allclose(E[1], expected, atol=1e-12)
        assert np.allclose(B[2], expected, atol=1e-12)
        assert np.allclose(E[0], 0.0, atol=1e-12)
        assert np.allclose(E[2], 0.0, atol=1e-12)

    def test_real_fields(self, grid, random_modes):
        """Test E and B are the real and imaginary parts"""
        config = synthesize(random_modes, grid, t=0.3)
        assert config.t == 0.3
        assert np.array_equal(config.E, config.F.real)
        assert np.array_equal(config.B, config.F.imag)

    def test_time_derivative(self, grid, random_modes):
        """Test analytic dF/dt against central differences"""
        exact = time_derivative(random_modes, grid, t=0.1)
        approx = finite_difference_time_derivative(random_modes, grid, t=0.1)
        assert np.max(np.abs(exact - approx)) <= 1e-6 * np.max(np.abs(exact))

    def test_translation_generation(self, grid, random_modes):
        """Test grid shifts equal per-mode phase factors"""
        delta = (grid.spacing, 0.0, 3.0 * grid.spacing)
        scale = synthesize(random_modes, grid).scale
        assert check_translation_generation(random_modes, grid, delta) <= 1e-12 * scale

    def test_translation_off_grid(self, grid, random_modes):
        """Test translation must be a grid multiple"""
        with pytest.raises(ValidationError):
            check_translation_generation(random_modes, grid, (0.5 * grid.spacing, 0.0, 0.0))

    def test_aliasing_rejected(self):
        """Test lattice cutoff at the Nyquist limit"""
        grid = build_grid(1.0, 4)
        lattice = build_mode_lattice(grid, 13.0)
        with pytest.raises(AliasingError):
            synthesize(random_amplitudes(lattice, 3, seed=0), grid)

    def test_lattice_box_mismatch(self, field_lattice):
        """Test lattice and grid must share a box"""
        other = build_grid(2.0, 16)
        with pytest.raises(ValidationError):
            synthesize(random_amplitudes(field_lattice, 3, seed=0), other)

    def test_longitudinal_needs_wavevector(self, grid, random_modes):
        """Test k = 0 cannot carry a longitudinal component"""
        with pytest.raises(ValidationError):
            add_longitudinal(synthesize(random_modes, grid), (0, 0, 0), 1.0)


def _unit_box():
    grid = build_grid(1.0, 16)
    return grid, build_mode_lattice(grid, 2.0 * np.pi * 2.5)


scalars = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False)
coefficients = st.complex_numbers(max_magnitude=3.0, allow_nan=False, allow_infinity=False)
times = st.floats(min_value=-5.0, max_value=5.0, allow_nan=False)


class TestSynthesisProperties:
    """Property tests for linearity, periodicity and helicity"""

    @settings(max_examples=25, deadline=None)
    @given(a=scalars, b=scalars, seed=st.integers(0, 2 ** 16), t=times)
    def test_linearity(self, a, b, seed, t):
        """Test synthesize(a m1 + b m2) = a F1 + b F2 pointwise for real a, b"""
        grid, lattice = _unit_box()
        m1 = random_amplitudes(lattice, 6, seed=seed)
        m2 = random_amplitudes(lattice, 6, seed=seed + 1)
        combined = synthesize(m1 * a + m2 * b, grid, t).F
        separate = a * synthesize(m1, grid, t).F + b * synthesize(m2, grid, t).F

        scale = max(1.0, float(np.max(np.abs(separate))))
        assert np.max(np.abs(combined - separate)) <= 1e-12 * scale

    @settings(max_examples=25, deadline=None)
    @given(t=times, lam=st.sampled_from([1, 2]), amplitude=coefficients.filter(lambda z: abs(z) > 1e-3))
    def test_period_of_single_mode(self, t, lam, amplitude):
        """Test a single mode repeats after 2 pi / omega"""
        grid, lattice = _unit_box()
        modes = plane_wave(lattice, [0.0, 2.0 * np.pi, 2.0 * np.pi], lam, amplitude)
        omega = 2.0 * np.pi * np.sqrt(2.0)
        now = synthesize(modes, grid, t)
        later = synthesize(modes, grid, t + 2.0 * np.pi / omega)

        assert np.max(np.abs(later.F - now.F)) <= 1e-12 * now.scale

    def test_zero_amplitudes(self):
        """Test an empty state synthesizes to F = 0"""
        grid, lattice = _unit_box()
        empty = ModeAmplitudes(lattice, np.zeros((len(lattice), 2), dtype=complex))
        assert not np.any(synthesize(empty, grid, 0.7).F)

    @settings(max_examples=25, deadline=None)
    @given(t=times, handedness=st.sampled_from([1.0, -1.0]))
    def test_circular_mode_has_constant_magnitude(self, t, handedness):
        """Test |F| of a circularly polarized mode does not depend on t"""
        grid, lattice = _unit_box()
        k = [2.0 * np.pi, 0.0, 2.0 * np.pi]
        modes = plane_wave(lattice, k, 1, 1.0) + plane_wave(lattice, k, 2, -1j * handedness)
        start = synthesize(modes, grid, 0.0)

        assert np.max(np.abs(np.abs(synthesize(modes, grid, t).F) - np.abs(start.F))) <= 1e-12 * start.scale

    def test_linear_mode_magnitude_oscillates(self):
        """Test a linearly polarized mode is not a pure phase"""
        grid, lattice = _unit_box()
        modes = plane_wave(lattice, [2.0 * np.pi, 0.0, 0.0], 1, 1.0)
        quarter = 0.25
        assert np.max(np.abs(np.abs(synthesize(modes, grid, quarter).F) - np.abs(synthesize(modes, grid).F))) > 1.0


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
