"""
Tests for Maxwell Module
"""

import numpy as np
import pytest

from src.core import UnitSystem, build_grid, build_mode_lattice
from src.fields import (
    FieldConfiguration,
    add_longitudinal,
    plane_wave,
    random_amplitudes,
    synthesize,
    time_derivative,
)
from src.maxwell import (
    bilinear_overlap,
    conservation_drift,
    curl,
    div,
    energy,
    energy_cross_term,
    energy_momentum,
    evolve,
    gradient,
    maxwell_residual,
    momentum,
)
from src.utils.errors import AliasingError


def _config_from(components, grid):
    return FieldConfiguration(F=np.stack(components).astype(complex), t=0.0, grid=grid)


class TestSpectralCalculus:
    """Tests for spectral derivatives"""

    def test_curl_of_sine(self):
        """Test curl (0, 0, sin x) = (0, -cos x, 0)"""
        grid = build_grid(2.0 * np.pi, 16)
        x = grid.coordinates()[0]
        zero = np.zeros(grid.shape)
        result = curl(_config_from([zero, zero, np.sin(x)], grid))

        assert np.allclose(result[0], 0.0, atol=1e-12)
        assert np.allclose(result[1], -np.cos(x), atol=1e-12)
        assert np.allclose(result[2], 0.0, atol=1e-12)

    def test_curl_along_every_axis(self):
        """Test curl (sin z, sin x, sin y) = (cos y, cos z, cos x)"""
        grid = build_grid(2.0 * np.pi, 16)
        x, y, z = grid.coordinates()
        result = curl(_config_from([np.sin(z), np.sin(x), np.sin(y)], grid))

        assert np.allclose(result[0], np.cos(y), atol=1e-12)
        assert np.allclose(result[1], np.cos(z), atol=1e-12)
        assert np.allclose(result[2], np.cos(x), atol=1e-12)

    def test_gradient_of_z_dependence(self):
        """Test d_z acts on the last grid axis and leaves components apart"""
        grid = build_grid(2.0 * np.pi, 16)
        z = grid.coordinates()[2]
        zero = np.zeros(grid.shape)
        grad = gradient(_config_from([zero, 3.0 * np.sin(z), zero], grid))

        assert np.allclose(grad[2, 1], 3.0 * np.cos(z), atol=1e-12)
        others = [(j, l) for j in range(3) for l in range(3) if (j, l) != (2, 1)]
        assert max(np.max(np.abs(grad[j, l])) for j, l in others) <= 1e-12

    def test_div_of_sine(self):
        """Test div (sin x, 0, 0) = cos x"""
        grid = build_grid(2.0 * np.pi, 16)
        x = grid.coordinates()[0]
        zero = np.zeros(grid.shape)
        assert np.allclose(div(_config_from([np.sin(x), zero, zero], grid)), np.cos(x), atol=1e-12)

    def test_gradient_layout(self):
        """Test [j, l] = d_j F_l"""
        grid = build_grid(2.0 * np.pi, 16)
        y = grid.coordinates()[1]
        zero = np.zeros(grid.shape)
        grad = gradient(_config_from([np.sin(2.0 * y), zero, zero], grid))

        assert grad.shape == (3, 3, 16, 16, 16)
        assert np.allclose(grad[1, 0], 2.0 * np.cos(2.0 * y), atol=1e-12)
        assert np.allclose(grad[0, 0], 0.0, atol=1e-12)

    def test_static_field_residuals(self):
        """Test a static sine field violates the curl equation by max |cos x|"""
        grid = build_grid(2.0 * np.pi, 16)
        x = grid.coordinates()[0]
        zero = np.zeros(grid.shape)
        config = _config_from([zero, zero, np.sin(x)], grid)
        residual = maxwell_residual(config, np.zeros((3,) + grid.shape))

        assert residual.curl_residual == pytest.approx(1.0, abs=1e-12)
        assert residual.div_residual == pytest.approx(0.0, abs=1e-12)

    def test_nyquist_content_rejected(self):
        """Test fields with content at the Nyquist plane"""
        grid = build_grid(1.0, 8)
        index = np.arange(8)
        alternating = np.broadcast_to((-1.0) ** index[:, None, None], grid.shape)
        zero = np.zeros(grid.shape)
        with pytest.raises(AliasingError):
            curl(_config_from([zero, alternating, zero], grid))


class TestMaxwellResidual:
    """Tests for the field equations"""

    def test_synthesized_fields_solve_maxwell(self, grid, random_modes):
        """Test curl F = (i/c) dF/dt and div F = 0"""
        config = synthesize(random_modes, grid, t=0.2)
        residual = maxwell_residual(config, time_derivative(random_modes, grid, t=0.2))
        assert residual.within(1e-10 * config.scale * 40.0)

    def test_speed_of_light(self, grid):
        """Test residual with c != 1"""
        units = UnitSystem(c=3.0)
        lattice = build_mode_lattice(grid, 2.0 * np.pi * 2.0, units)
        modes = random_amplitudes(lattice, 6, seed=5)
        config = synthesize(modes, grid)
        residual = maxwell_residual(config, time_derivative(modes, grid), units)
        assert residual.curl_residual <= 1e-10 * config.scale * 40.0

    def test_speed_of_light_from_field(self, grid):
        """Test the residual reads c from the synthesized field"""
        lattice = build_mode_lattice(grid, 2.0 * np.pi * 2.0, UnitSystem(c=3.0))
        modes = random_amplitudes(lattice, 6, seed=5)
        config = synthesize(modes, grid)

        assert config.units.c == 3.0
        assert maxwell_residual(config, time_derivative(modes, grid)).curl_residual <= 1e-10 * config.scale * 40.0

    def test_longitudinal_field_divergence(self, grid, random_modes):
        """Test injected component has div F = A |k| cos(k.r)"""
        config = add_longitudinal(synthesize(random_modes, grid), (1, 0, 0), 0.5)
        x = grid.coordinates()[0]
        expected = 0.5 * 2.0 * np.pi * np.cos(2.0 * np.pi * x)
        assert np.allclose(div(config), expected, atol=1e-10)


class TestEnergyMomentum:
    """Tests for energy and momentum"""

    def test_plane_wave_quanta(self, grid, field_lattice):
        """Test H = hbar omega |a|^2 and P = hbar k |a|^2"""
        modes = plane_wave(field_lattice, [2.0 * np.pi, 0.0, 0.0], 1, 2.0)
        result = energy_momentum(synthesize(modes, grid))

        assert result.H == pytest.approx(8.0 * np.pi, rel=1e-12)
        assert np.allclose(result.P, [8.0 * np.pi, 0.0, 0.0], atol=1e-10)

    def test_momentum_with_other_speed_of_light(self, grid):
        """Test grid momentum uses the c of the lattice, P = H / c for a plane wave"""
        lattice = build_mode_lattice(grid, 2.0 * np.pi * 2.5, UnitSystem(c=2.0))
        modes = plane_wave(lattice, [2.0 * np.pi, 0.0, 0.0], 2, 1.0)
        config = synthesize(modes, grid)
        H = energy(modes)

        assert H == pytest.approx(4.0 * np.pi, rel=1e-12)
        assert np.allclose(momentum(config), momentum(modes), atol=1e-10)
        assert np.allclose(momentum(config), [H / 2.0, 0.0, 0.0], atol=1e-10)
        assert np.allclose(energy_momentum(config).P, [2.0 * np.pi, 0.0, 0.0], atol=1e-10)

    def test_grid_matches_modes(self, grid, random_modes):
        """Test grid integrals against the mode sums"""
        config = synthesize(random_modes, grid)
        H = energy(random_modes)

        assert energy(config) == pytest.approx(H, rel=1e-10)
        assert np.max(np.abs(momentum(config) - momentum(random_modes))) <= 1e-10 * H

    def test_cross_term_of_orthogonal_modes(self, grid, field_lattice):
        """Test different wavevectors do not interfere"""
        m1 = plane_wave(field_lattice, [2.0 * np.pi, 0.0, 0.0], 1, 1.0)
        m2 = plane_wave(field_lattice, [0.0, 2.0 * np.pi, 0.0], 2, 1.0j)
        split = energy_cross_term(m1, m2, grid)
        assert abs(split.cross) <= 1e-10 * split.H12

    def test_cross_term_of_same_mode(self, grid, field_lattice):
        """Test H(2 F) = 4 H(F) and the bilinear overlap"""
        m = plane_wave(field_lattice, [0.0, 0.0, 2.0 * np.pi], 1, 1.0)
        split = energy_cross_term(m, m, grid)

        assert split.H12 == pytest.approx(4.0 * split.H1, rel=1e-12)
        assert split.cross == pytest.approx(bilinear_overlap(m, m, grid), rel=1e-12)


    def test_opposite_states_cancel(self, grid, field_lattice):
        """Test m and -m superpose to zero energy"""
        m = plane_wave(field_lattice, [0.0, 2.0 * np.pi, 0.0], 2, 0.8)
        split = energy_cross_term(m, -m, grid)

        assert split.H12 == 0.0
        assert split.cross == pytest.approx(-2.0 * split.H1)


class TestEvolution:
    """Tests for exact evolution"""

    def test_evolve_matches_synthesis_time(self, grid, random_modes):
        """Test evolving amplitudes equals synthesizing at a later time"""
        later = synthesize(evolve(random_modes, 0.37), grid).F
        direct = synthesize(random_modes, grid, t=0.37).F
        assert np.allclose(later, direct, atol=1e-12 * np.max(np.abs(direct)))

    def test_half_period_negates(self, field_lattice):
        """Test evolving a single mode by pi / omega flips its amplitude"""
        modes = plane_wave(field_lattice, [2.0 * np.pi, 0.0, 0.0], 1, 1.0 + 0.5j)
        omega = 2.0 * np.pi
        assert np.allclose(evolve(modes, np.pi / omega).amp, -modes.amp, atol=1e-15)

    def test_reversible(self, random_modes):
        """Test dt then -dt restores the state"""
        assert np.allclose(evolve(evolve(random_modes, 0.3), -0.3).amp, random_modes.amp, atol=1e-15)

    def test_conservation(self, random_modes):
        """Test energy and momentum stay constant"""
        report = conservation_drift(random_modes, 0.01, 200)

        assert report.steps == 200
        assert report.energy_drift <= 1e-12
        assert report.momentum_drift <= 1e-12

    def test_empty_state(self, field_lattice):
        """Test zero state has no energy"""
        modes = random_amplitudes(field_lattice, 0, seed=0)
        assert energy(modes) == 0.0
        assert conservation_drift(modes, 0.1, 3).energy_drift == 0.0


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
