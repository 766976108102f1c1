"""
Tests for Transforms Module
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.core import build_grid, build_mode_lattice
from src.fields import forward_transform, plane_wave, synthesize, time_derivative
from src.maxwell import energy
from src.transforms import (
    C,
    D,
    GENERATORS,
    IDENTITY,
    P,
    T,
    TransformOp,
    apply,
    apply_time_derivative,
    compose,
    group_elements,
    invariance_report,
    label,
    parse_op,
)
from src.utils.errors import ValidationError

words = st.text(alphabet="PTCD", max_size=8)


class TestGroupTable:
    """Tests for the composition table"""

    def test_involutions(self):
        """Test P^2 = T^2 = C^2 = identity"""
        for op in (P, T, C):
            assert compose([op, op]) == IDENTITY

    def test_duality_squares_to_charge_conjugation(self):
        """Test D^2 = C and D^4 = identity"""
        assert compose([D, D]) == C
        assert compose([D] * 4) == IDENTITY
        assert compose([D, D, D]) != IDENTITY

    def test_order_matters(self):
        """Test P then D differs from D then P"""
        assert parse_op("PD") != parse_op("DP")
        assert parse_op("PD") == compose([P, D])

    def test_group_size(self):
        """Test P, T, C, D generate sixteen elements"""
        elements = group_elements()
        assert len(elements) == 16
        assert len(set(elements)) == 16

    def test_labels(self):
        """Test shortest-word labels"""
        assert label(IDENTITY) == "identity"
        assert label(D) == "D"
        assert label(compose([D, D, D])) == "D^3"
        assert str(C) == "C"

    def test_parse_rejects_unknown_symbols(self):
        """Test invalid words"""
        with pytest.raises(ValidationError):
            parse_op("PX")

    def test_parse_identity(self):
        """Test identity spellings"""
        assert parse_op("identity") == IDENTITY
        assert parse_op("") == IDENTITY

    def test_phase_normalized(self):
        """Test phase is kept modulo 4"""
        assert TransformOp(phase=6) == C

    @given(words, words, words)
    def test_associative(self, a, b, c):
        """Test (ab)c = a(bc)"""
        assert compose([compose([parse_op(a), parse_op(b)]), parse_op(c)]) == \
            compose([parse_op(a), compose([parse_op(b), parse_op(c)])])

    @given(words)
    def test_closed(self, word):
        """Test every word lands on a listed element"""
        assert parse_op(word) in group_elements()


class TestFieldAction:
    """Tests for transformations acting on configurations"""

    def test_charge_conjugation(self, grid, random_modes):
        """Test C flips E and B"""
        config = synthesize(random_modes, grid)
        result = apply(C, config)
        assert np.array_equal(result.F, -config.F)

    def test_duality_rotation(self, grid, random_modes):
        """Test D maps E to -B and B to E"""
        config = synthesize(random_modes, grid)
        result = apply(D, config)

        assert np.allclose(result.E, -config.B, atol=1e-14)
        assert np.allclose(result.B, config.E, atol=1e-14)

    def test_parity(self, grid, random_modes):
        """Test E -> -E(-r), B -> B(-r)"""
        config = synthesize(random_modes, grid)
        result = apply(P, config)
        # point (1, 2, 3) maps to (N-1, N-2, N-3)
        n = grid.points_per_axis

        assert result.E[:, 1, 2, 3] == pytest.approx(-config.E[:, n - 1, n - 2, n - 3])
        assert result.B[:, 1, 2, 3] == pytest.approx(config.B[:, n - 1, n - 2, n - 3])
        assert np.array_equal(apply(P, result).F, config.F)

    def test_time_reversal_labels_time(self, grid, random_modes):
        """Test T relabels t and flips B"""
        config = synthesize(random_modes, grid, t=0.25)
        result = apply(T, config)

        assert result.t == -0.25
        assert np.array_equal(result.E, config.E)
        assert np.array_equal(result.B, -config.B)

    def test_time_reversal_of_derivative(self, grid, random_modes):
        """Test the transformed dF/dt differentiates the time-reversed trajectory"""
        t = 0.25
        h = 1e-4 / float(np.max(random_modes.lattice.omega))

        def reversed_field(s):
            return apply(T, synthesize(random_modes, grid, -s)).F

        numeric = (reversed_field(-t + h) - reversed_field(-t - h)) / (2.0 * h)
        transformed = apply_time_derivative(T, time_derivative(random_modes, grid, t))
        scale = float(np.max(np.abs(transformed)))
        assert np.max(np.abs(numeric - transformed)) <= 1e-6 * scale

    @settings(max_examples=25, deadline=None)
    @given(
        n=st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2)).filter(
            lambda n: 0 < sum(c * c for c in n) <= 6
        ),
        lam=st.sampled_from([1, 2]),
        amplitude=st.complex_numbers(min_magnitude=0.1, max_magnitude=3.0, allow_nan=False, allow_infinity=False),
    )
    def test_parity_moves_plane_wave_to_opposite_wavevector(self, n, lam, amplitude):
        """Test P sends content on k to -k with E negated and B kept"""
        grid = build_grid(1.0, 16)
        lattice = build_mode_lattice(grid, 2.0 * np.pi * 2.5)
        modes = plane_wave(lattice, 2.0 * np.pi * np.array(n, dtype=float), lam, amplitude)
        config = synthesize(modes, grid)
        result = apply(P, config)

        E_hat, B_hat = forward_transform(config.E), forward_transform(config.B)
        E_new, B_new = forward_transform(result.E), forward_transform(result.B)
        plus = tuple(np.mod(n, 16))
        minus = tuple(np.mod(-np.array(n), 16))

        scale = float(np.max(np.abs(E_hat)))
        assert np.allclose(E_new[(slice(None),) + minus], -E_hat[(slice(None),) + plus], atol=1e-12 * scale)
        assert np.allclose(B_new[(slice(None),) + minus], B_hat[(slice(None),) + plus], atol=1e-12 * scale)
        assert energy(result) == pytest.approx(energy(config), rel=1e-12)

        occupied = np.abs(E_new).sum(axis=0) + np.abs(B_new).sum(axis=0) > 1e-12 * scale
        assert set(zip(*np.nonzero(occupied))) == {plus, minus}

    @pytest.mark.parametrize("name", ["identity", "P", "T", "C", "D", "PT", "PTD", "DDD"])
    def test_maxwell_invariance(self, grid, random_modes, name):
        """Test the field equations survive every transformation"""
        config = synthesize(random_modes, grid, t=0.1)
        dF = time_derivative(random_modes, grid, t=0.1)
        before, after = invariance_report(config, dF, parse_op(name))

        tolerance = 1e-10 * 40.0 * config.scale
        assert before.within(tolerance)
        assert after.within(tolerance)

    def test_generators_cover_table(self):
        """Test the generator map"""
        assert set(GENERATORS) == {"P", "T", "C", "D"}


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
