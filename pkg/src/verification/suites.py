"""
Verification suites

Each suite evaluates a group of relations numerically and returns a
SuiteResult. Suites share one grid, one field lattice (below the grid
Nyquist limit) and lazily built commutator lattices.
"""

from functools import cached_property
from typing import Callable, Dict, List

import numpy as np

from src.commutators import (
    ANALYTIC,
    MODESUM,
    CommutatorPair,
    CommutatorSpec,
    TestFunction,
    commutator_scale,
    equal_time_commutator,
    generator_identity_check,
    implied_commutator_prefactor,
    kernel_symmetry_audit,
    m_tensor_check,
    pauli_jordan_modesum,
    pauli_jordan_radial_oracle,
    pauli_jordan_smeared,
    smeared_delta_gradient,
    smeared_delta_gradient_quadrature,
    unequal_time_commutator,
)
from src.core import UnitSystem, build_grid, build_mode_lattice, triad_defect
from src.fields import (
    add_longitudinal,
    check_translation_generation,
    finite_difference_time_derivative,
    mode_normalization,
    plane_wave,
    random_amplitudes,
    synthesize,
    time_derivative,
)
from src.maxwell import (
    bilinear_overlap,
    conservation_drift,
    energy,
    energy_cross_term,
    maxwell_residual,
    momentum,
)
from src.tensoralg import (
    EPSILON,
    Tensor3x3Field,
    antisym_to_vector,
    decompose_GU_SA,
    divergence_absurdity_factor,
    epsilon_contraction_identity_check,
    levi_civita,
    pseudotensor_parity_check,
    random_pm_points,
    vector_to_antisym,
)
from src.transforms import C, D, GENERATORS, IDENTITY, P, T, apply, compose, invariance_report
from src.utils.config import RunConfig
from src.utils.logger import LoggerMixin
from .results import SuiteResult, at_least, at_most

SAME_TYPE_PAIRS = (CommutatorPair.F_F, CommutatorPair.Fd_Fd, CommutatorPair.E_E, CommutatorPair.B_B)
INDEX_PAIRS = [(k, l) for k in (1, 2, 3) for l in (1, 2, 3)]


def _relative(a: complex, b: complex, floor: float = 0.0) -> float:
    return float(abs(a - b) / max(abs(b), floor, np.finfo(float).tiny))


def _exact_mismatch(a: np.ndarray, b: np.ndarray) -> float:
    """0 for bit-identical arrays, otherwise the largest difference"""
    return 0.0 if np.array_equal(a, b) else float(np.max(np.abs(a - b)))


class VerificationSuites(LoggerMixin):
    """Runs the verification suites for one RunConfig"""

    def __init__(self, config: RunConfig):
        self.config = config
        self.units = UnitSystem(hbar=config.hbar, c=config.c)
        self.grid = build_grid(config.box_length, config.points_per_axis)
        self.field_lattice = build_mode_lattice(self.grid, config.field_kmax, self.units)
        self.logger.info(
            f"Grid N={self.grid.points_per_axis}, L={self.grid.box_length}; "
            f"field lattice {len(self.field_lattice)} modes"
        )

    @property
    def runners(self) -> Dict[str, Callable[[], SuiteResult]]:
        return {
            "maxwell": self.run_maxwell,
            "transforms": self.run_transforms,
            "tensoralg": self.run_tensoralg,
            "commutators": self.run_commutators,
        }

    @cached_property
    def random_modes(self):
        return random_amplitudes(self.field_lattice, self.config.n_random_modes, self.config.seed)

    @cached_property
    def commutator_lattice(self):
        lattice = build_mode_lattice(self.grid, self.config.commutator_kmax, self.units)
        self.logger.info(f"Commutator lattice k_max={lattice.k_max:.6g}: {len(lattice)} modes")
        return lattice

    @cached_property
    def light_cone_lattice(self):
        lattice = build_mode_lattice(self.grid, self.config.light_cone_kmax, self.units)
        self.logger.info(f"Light-cone lattice k_max={lattice.k_max:.6g}: {len(lattice)} modes")
        return lattice

    # ------------------------------------------------------------------ maxwell

    def run_maxwell(self) -> SuiteResult:
        suite = SuiteResult("maxwell")
        grid, modes = self.grid, self.random_modes
        config = synthesize(modes, grid)
        scale = config.scale
        omega_max = float(np.max(self.field_lattice.omega))

        suite.add(at_most(
            "polarization_triads", "transverse right-handed polarization triads",
            triad_defect(self.field_lattice), 1e-12,
        ))

        residual = maxwell_residual(config, time_derivative(modes, grid), self.units)
        suite.add(at_most(
            "curl_residual", "curl F = (i/c) dF/dt",
            residual.curl_residual / scale, 1e-10, "analytic time derivative",
        ))
        suite.add(at_most("div_residual", "div F = 0", residual.div_residual / scale, 1e-10))

        fd = maxwell_residual(config, finite_difference_time_derivative(modes, grid), self.units)
        suite.add(at_most(
            "curl_residual_finite_difference", "curl F = (i/c) dF/dt",
            fd.curl_residual / (scale * omega_max / self.units.c), 1e-6, "central difference",
        ))

        dt = 0.5 / omega_max
        drift = conservation_drift(modes, dt, self.config.evolve_steps)
        suite.add(at_most(
            "energy_conservation", "[H, H] = 0 under free evolution",
            drift.energy_drift, 1e-12, f"{drift.steps} steps",
        ))
        suite.add(at_most(
            "momentum_conservation", "[H, P_k] = 0 under free evolution",
            drift.momentum_drift, 1e-12, f"{drift.steps} steps",
        ))

        H_grid, H_modes = energy(config), energy(modes)
        suite.add(at_most("parseval_energy", "field energy integral", _relative(H_grid, H_modes), 1e-10))
        P_grid, P_modes = momentum(config, self.units), momentum(modes)
        suite.add(at_most(
            "parseval_momentum", "field momentum integral",
            float(np.max(np.abs(P_grid - P_modes))) * self.units.c / H_modes, 1e-10,
        ))

        step = 2.0 * np.pi / self.grid.box_length
        wave = plane_wave(self.field_lattice, (step, 0.0, 0.0), 1, 0.7 - 0.2j)
        wave_config = synthesize(wave, grid)
        H_wave = energy(wave_config)
        P_wave = momentum(wave_config, self.units)
        suite.add(at_most(
            "plane_wave_dispersion", "|P| = H/c for a plane wave",
            abs(np.linalg.norm(P_wave) * self.units.c - H_wave) / H_wave, 1e-10,
        ))
        E0 = 2.0 * mode_normalization(self.field_lattice)[self.field_lattice.index_of((1, 0, 0))] * abs(wave.amp).max()
        suite.add(at_most(
            "plane_wave_energy", "H = E0^2 V / 8 pi",
            _relative(H_wave, E0 ** 2 * grid.volume / (8.0 * np.pi)), 1e-10,
        ))

        other = random_amplitudes(self.field_lattice, self.config.n_random_modes, self.config.seed + 1)
        split = energy_cross_term(modes, other, grid)
        suite.add(at_most(
            "energy_cross_term", "energy of superposed fields is not additive",
            _relative(split.cross, bilinear_overlap(modes, other, grid), floor=split.H1 + split.H2), 1e-12,
        ))
        doubled = energy_cross_term(modes, modes, grid)
        suite.add(at_most("energy_doubling", "H(2 F) = 4 H(F)", _relative(doubled.H12, 4.0 * doubled.H1), 1e-12))
        k2 = plane_wave(self.field_lattice, (0.0, step, 0.0), 2, 1.1)
        disjoint = energy_cross_term(wave, k2, grid)
        suite.add(at_most(
            "energy_orthogonal_modes", "distinct modes add energies",
            abs(disjoint.cross) / (disjoint.H1 + disjoint.H2), 1e-10,
        ))

        suite.add(at_most(
            "translation_generator", "momentum generates translations",
            check_translation_generation(modes, grid, (grid.spacing, 2 * grid.spacing, -3 * grid.spacing)) / scale,
            1e-10,
        ))
        return suite

    # --------------------------------------------------------------- transforms

    def run_transforms(self) -> SuiteResult:
        suite = SuiteResult("transforms")
        grid = self.grid
        rng = np.random.default_rng(self.config.seed)
        noise = rng.normal(size=(3,) + grid.shape) + 1j * rng.normal(size=(3,) + grid.shape)
        arbitrary = synthesize(self.random_modes, grid).with_field(noise)

        twice_D = apply(D, apply(D, arbitrary)).F
        suite.add(at_most(
            "dual_squared", "D^2 = C",
            _exact_mismatch(twice_D, apply(C, arbitrary).F),
            0.0,
        ))
        twice_P = apply(P, apply(P, arbitrary)).F
        suite.add(at_most(
            "parity_squared", "P^2 = identity",
            _exact_mismatch(twice_P, arbitrary.F),
            0.0,
        ))

        relations = {
            "D D = C": compose([D, D]) == C,
            "P P = identity": compose([P, P]) == IDENTITY,
            "T T = identity": compose([T, T]) == IDENTITY,
            "C C = identity": compose([C, C]) == IDENTITY,
            "D^4 = identity": compose([D] * 4) == IDENTITY,
            "P then D = D then P then C": compose([P, D]) == compose([D, P, C]),
            "T then D = D then T then C": compose([T, D]) == compose([D, T, C]),
        }
        broken = [name for name, holds in relations.items() if not holds]
        suite.add(at_most("group_relations", "transformation group table", len(broken), 0, ", ".join(broken)))

        modes = self.random_modes
        config = synthesize(modes, grid)
        dF_dt = time_derivative(modes, grid)
        H = energy(config)
        for name, op in GENERATORS.items():
            before, after = invariance_report(config, dF_dt, op, self.units)
            worst = max(after.curl_residual, after.div_residual)
            suite.add(at_most(
                f"maxwell_invariance_{name}", "vacuum Maxwell equations invariant under P, T, C, D",
                worst / config.scale, 1e-10,
            ))
            suite.add(at_most(
                f"energy_invariance_{name}", "E^2 + B^2 invariant under P, T, C, D",
                _relative(energy(apply(op, config)), H), 1e-12,
            ))

        broken_state = add_longitudinal(config, (1, 0, 0), 1.0)
        before, after = invariance_report(broken_state, dF_dt, C, self.units)
        suite.add(at_most(
            "sign_change_keeps_divergence", "C is an overall sign",
            abs(after.div_residual - before.div_residual), 0.0,
        ))
        return suite

    # ---------------------------------------------------------------- tensoralg

    def run_tensoralg(self) -> SuiteResult:
        suite = SuiteResult("tensoralg")
        suite.add(at_most(
            "epsilon_contraction", "eps_jkl eps_jsu = d_ks d_lu - d_ku d_ls",
            epsilon_contraction_identity_check(), 0,
        ))
        spot = [levi_civita(1, 2, 3), levi_civita(2, 1, 3), levi_civita(1, 1, 2)]
        suite.add(at_most(
            "levi_civita_values", "totally antisymmetric symbol",
            float(np.max(np.abs(np.array(spot) - np.array([1, -1, 0])))), 0,
        ))
        suite.add(at_most(
            "epsilon_full_contraction", "eps_jkl eps_jkl = 6",
            abs(int(np.sum(EPSILON * EPSILON)) - 6), 0,
        ))
        suite.add(at_most(
            "divergence_factor", "double curl forces d_u F_u = 2 d_l F_l",
            abs(divergence_absurdity_factor() - 2.0), 0.0,
        ))

        v = np.array([1.0, 2.0, 3.0])
        suite.add(at_most(
            "antisym_round_trip", "antisymmetric tensor from an odd vector",
            float(np.max(np.abs(antisym_to_vector(vector_to_antisym(v)) - v))), 0.0,
        ))

        points = random_pm_points(16, self.config.seed)
        radial = np.exp(-np.sum(points ** 2, axis=1))
        odd = Tensor3x3Field(points, vector_to_antisym(points * radial[:, None]))
        parts = decompose_GU_SA(odd)
        suite.add(at_most(
            "pseudotensor_form_is_AU", "kernel reduces to eps_kls alpha_s",
            max(parts.SG.norm(), parts.AG.norm(), parts.SU.norm()), 1e-15,
        ))
        suite.add(at_most("pseudotensor_parity", "kernel is a pseudotensor", pseudotensor_parity_check(odd), 1e-15))

        b = 0.75
        even = Tensor3x3Field(points, np.broadcast_to(b * np.eye(3), (len(points), 3, 3)).copy())
        suite.add(at_most(
            "parity_flags_scalar_kernel", "symmetric even kernel is not a pseudotensor",
            abs(pseudotensor_parity_check(even) - 2 * b), 1e-15,
        ))

        rng = np.random.default_rng(self.config.seed)
        generic = Tensor3x3Field(points, rng.normal(size=(len(points), 3, 3)))
        parts = decompose_GU_SA(generic)
        total = parts.SG.samples + parts.AG.samples + parts.SU.samples + parts.AU.samples
        suite.add(at_most(
            "decomposition_completeness", "even/odd and symmetric/antisymmetric split",
            float(np.max(np.abs(total - generic.samples))), 1e-15,
        ))
        again = decompose_GU_SA(parts.AU)
        suite.add(at_most(
            "decomposition_idempotent", "even/odd and symmetric/antisymmetric split",
            float(np.max(np.abs(again.AU.samples - parts.AU.samples))), 1e-15,
        ))
        return suite

    # -------------------------------------------------------------- commutators

    def _equal_time_checks(self, suite: SuiteResult) -> None:
        sigma = self.config.sigma
        L = self.grid.box_length
        lattice = self.commutator_lattice
        origin = np.full(3, 0.5 * L)
        f = TestFunction(origin + np.array([0.0, 0.0, 1.25 * sigma]), sigma)
        g = TestFunction(origin, sigma)
        base = CommutatorSpec(CommutatorPair.E_B, 1, 2, 0.0, f, g)
        scale = commutator_scale(base, self.units)

        prefactors = implied_commutator_prefactor(lattice)
        suite.add(at_most(
            "normalization_redundancy", "energy normalization fixes the 4 pi hbar c prefactor",
            float(np.max(np.abs(prefactors / self.units.commutator_prefactor - 1.0))), 1e-6,
        ))

        analytic_worst, modesum_worst = 0.0, 0.0
        for pair in SAME_TYPE_PAIRS:
            for k, l in INDEX_PAIRS:
                spec = CommutatorSpec(pair, k, l, 0.0, f, g)
                analytic_worst = max(analytic_worst, abs(equal_time_commutator(spec, ANALYTIC, units=self.units, box_length=L).value))
                modesum_worst = max(modesum_worst, abs(equal_time_commutator(spec, MODESUM, lattice).value))
        suite.add(at_most("same_type_analytic", "[F, F] = [E, E] = [B, B] = 0 at equal times", analytic_worst, 0.0))
        suite.add(at_most(
            "same_type_modesum", "[F, F] = [E, E] = [B, B] = 0 at equal times",
            modesum_worst / scale, 1e-12,
        ))

        G = smeared_delta_gradient(f, g, 3, L)
        oracle = smeared_delta_gradient_quadrature(f, g, 3, self.grid)
        suite.add(at_most("delta_gradient_quadrature", "smeared derivative of the delta function", _relative(G, oracle), 1e-8))
        transverse = max(abs(smeared_delta_gradient(f, g, s, L)) for s in (1, 2))
        suite.add(at_most("delta_gradient_transverse", "smeared derivative of the delta function", transverse, 0.0))

        analytic = equal_time_commutator(base, ANALYTIC, units=self.units, box_length=L).value
        suite.add(at_most(
            "E_B_closed_form", "[E_k, B_l] = -i 4 pi hbar c eps_kls d_s delta",
            _relative(analytic, 1j * self.units.commutator_prefactor * G), 1e-14,
        ))
        modesum = equal_time_commutator(base, MODESUM, lattice).value
        suite.add(at_most(
            "E_B_modesum", "[E_k, B_l] = -i 4 pi hbar c eps_kls d_s delta",
            _relative(modesum, analytic), 1e-6, f"k_max sigma = {lattice.k_max * sigma:.3g}",
        ))

        swapped = equal_time_commutator(base.with_indices(2, 1), ANALYTIC, units=self.units, box_length=L).value
        diagonal = max(
            abs(equal_time_commutator(base.with_indices(k, k), method, lattice, self.units, L).value)
            for k in (1, 2, 3) for method in (ANALYTIC, MODESUM)
        )
        suite.add(at_most("E_B_antisymmetry", "[E_k, B_l] antisymmetric in k, l", abs(swapped + analytic), 0.0))
        suite.add(at_most("E_B_diagonal", "[E_k, B_k] = 0", diagonal / scale, 1e-12))

        fd_f = equal_time_commutator(base.with_pair(CommutatorPair.Fd_F), MODESUM, lattice).value
        suite.add(at_most(
            "Fd_F_modesum", "[F+_k, F_l] = 8 pi hbar c eps_kls d_s delta",
            _relative(fd_f, -2.0 * self.units.commutator_prefactor * G), 1e-6,
        ))

        doubled_units = UnitSystem(hbar=2.0 * self.units.hbar, c=self.units.c)
        doubled_lattice = build_mode_lattice(self.grid, lattice.k_max, doubled_units)
        scaled_analytic = equal_time_commutator(base, ANALYTIC, units=doubled_units, box_length=L).value
        scaled_modesum = equal_time_commutator(base, MODESUM, doubled_lattice).value
        suite.add(at_most(
            "hbar_scaling", "commutators are linear in hbar",
            max(_relative(scaled_analytic, 2.0 * analytic), _relative(scaled_modesum, 2.0 * modesum)), 1e-12,
        ))

    def _pauli_jordan_checks(self, suite: SuiteResult) -> None:
        sigma = self.config.sigma_light_cone
        L = self.grid.box_length
        c = self.units.c
        g = TestFunction(np.zeros(3), sigma)
        tau = 2.0 * sigma / c

        value = pauli_jordan_smeared(g, tau, self.units, L)
        profile = (2.0 * np.pi * sigma ** 2) ** -1.5 * np.exp(-2.0)
        suite.add(at_most(
            "pauli_jordan_closed_form", "smeared D = -c tau g(c tau)",
            _relative(value, -c * tau * profile), 1e-14,
        ))
        suite.add(at_most(
            "pauli_jordan_oracle", "smeared D = -c tau g(c tau)",
            _relative(value, pauli_jordan_radial_oracle(g, tau, self.units)), 1e-8,
        ))
        suite.add(at_most(
            "pauli_jordan_odd", "D odd in tau",
            abs(value + pauli_jordan_smeared(g, -tau, self.units, L)), 0.0,
        ))
        suite.add(at_most("pauli_jordan_equal_time", "D vanishes at tau = 0", abs(pauli_jordan_smeared(g, 0.0, self.units, L)), 0.0))
        modesum = pauli_jordan_modesum(self.light_cone_lattice, g, tau)
        suite.add(at_most(
            "pauli_jordan_modesum", "smeared D = -c tau g(c tau)",
            _relative(modesum, value), 1e-4, f"k_max sigma = {self.light_cone_lattice.k_max * sigma:.3g}",
        ))

    def _unequal_time_checks(self, suite: SuiteResult) -> None:
        sigma = self.config.sigma_light_cone
        L = self.grid.box_length
        c = self.units.c
        lattice = self.light_cone_lattice
        tau = 2.0 * sigma / c

        g = TestFunction(np.zeros(3), sigma)
        f = TestFunction(np.array([c * tau, 0.0, 0.0]), sigma)
        spec = CommutatorSpec(CommutatorPair.E_E, 1, 1, tau, f, g)
        scale = commutator_scale(spec, self.units)

        worst = 0.0
        for pair in (CommutatorPair.E_E, CommutatorPair.E_B, CommutatorPair.Fd_F):
            for k, l in INDEX_PAIRS:
                s = CommutatorSpec(pair, k, l, tau, f, g)
                a = unequal_time_commutator(s, ANALYTIC, units=self.units, box_length=L).value
                m = unequal_time_commutator(s, MODESUM, lattice).value
                worst = max(worst, abs(a - m) / scale)
        suite.add(at_most(
            "unequal_time_modesum", "unequal-time commutators from the Pauli-Jordan function",
            worst, 1e-4, f"k_max sigma = {lattice.k_max * sigma:.3g}",
        ))

        light_cone_value = abs(unequal_time_commutator(spec.with_pair(CommutatorPair.E_B).with_indices(2, 3), ANALYTIC, units=self.units, box_length=L).value)
        suite.add(at_least(
            "light_cone_nonzero", "commutators live on the light cone",
            light_cone_value / scale, 1e-3,
        ))

        mismatch = 0.0
        for k, l in INDEX_PAIRS:
            for method, kwargs in ((ANALYTIC, {"units": self.units, "box_length": L}), (MODESUM, {"lattice": lattice})):
                ee = unequal_time_commutator(spec.with_indices(k, l), method, **kwargs).value
                bb = unequal_time_commutator(spec.with_pair(CommutatorPair.B_B).with_indices(k, l), method, **kwargs).value
                mismatch = max(mismatch, abs(ee - bb))
        suite.add(at_most("E_E_equals_B_B", "[E_k, E_l] and [B_k, B_l] share one kernel", mismatch / scale, 1e-12))

        zero_pairs = max(
            abs(unequal_time_commutator(spec.with_pair(pair).with_indices(k, l), MODESUM, lattice).value)
            for pair in (CommutatorPair.F_F, CommutatorPair.Fd_Fd) for k, l in INDEX_PAIRS
        )
        suite.add(at_most("F_F_unequal_time", "[F_k, F_l] = 0 at all times", zero_pairs / scale, 1e-12))

        far = TestFunction(np.full(3, 0.45 * L), sigma)
        causal_tau = sigma / c
        causal_worst = 0.0
        for pair in CommutatorPair:
            for k, l in INDEX_PAIRS:
                s = CommutatorSpec(pair, k, l, causal_tau, far, g)
                for value in (
                    unequal_time_commutator(s, ANALYTIC, units=self.units, box_length=L).value,
                    unequal_time_commutator(s, MODESUM, lattice).value,
                ):
                    causal_worst = max(causal_worst, abs(value))
        suite.add(at_most(
            "microcausality", "commutators vanish at spacelike separation",
            causal_worst / scale, 1e-8,
            f"separation {np.linalg.norm(far.center):.3g}, c tau {c * causal_tau:.3g}",
        ))

        near = TestFunction(np.array([0.0, 0.0, 1.25 * sigma]), sigma)
        eb = CommutatorSpec(CommutatorPair.E_B, 1, 2, 0.0, near, g)
        equal = equal_time_commutator(eb, ANALYTIC, units=self.units, box_length=L).value
        small_tau = 1e-6 * sigma / c
        shifted = CommutatorSpec(CommutatorPair.E_B, 1, 2, small_tau, near, g)
        suite.add(at_most(
            "equal_time_continuity", "unequal-time [E_k, B_l] reduces to the equal-time kernel",
            _relative(unequal_time_commutator(shifted, ANALYTIC, units=self.units, box_length=L).value, equal), 1e-6,
        ))

    def _field_equation_checks(self, suite: SuiteResult) -> None:
        grid = self.grid
        modes = self.random_modes
        f = TestFunction(np.full(3, 0.5 * grid.box_length), self.config.sigma)

        report = m_tensor_check(modes, grid, 1, 3, 2, f)
        suite.add(at_most(
            "m_tensor_routes", "M_kls = -16 pi hbar c eps_ksu d_u F_l",
            report.route_difference / report.scale, 1e-8,
        ))
        suite.add(at_most(
            "m_tensor_identity", "first operator Maxwell equation holds identically",
            report.identity_contraction / report.scale, 1e-8,
        ))

        amplitude = self.config.longitudinal_amplitude
        checked = m_tensor_check(modes, grid, 1, 3, 2, f, longitudinal_amplitude=amplitude)
        suite.add(at_most(
            "subsidiary_condition", "eps_kls M_kls = 32 pi hbar c div F vanishes for transverse fields",
            checked.divergence_contraction / checked.scale, 1e-8,
            f"injected longitudinal amplitude {amplitude:g}",
        ))

        violated = m_tensor_check(
            modes, grid, 1, 3, 2, f, longitudinal_amplitude=synthesize(modes, grid).scale
        )
        suite.add(at_least(
            "subsidiary_condition_detects_violation", "transversality is an independent condition",
            violated.divergence_contraction / violated.scale, 1e-3,
        ))
        suite.add(at_most(
            "divergence_contraction_value", "eps_kls M_kls = 32 pi hbar c div F",
            violated.divergence_mismatch / violated.scale, 1e-8,
        ))

        suite.add(at_most(
            "generator_identity", "field momentum generates spatial translations",
            max(generator_identity_check(modes, grid, s, l) for s in (1, 2, 3) for l in (1, 2, 3)), 1e-8,
        ))

        audit = kernel_symmetry_audit(self.commutator_lattice, 8, self.config.seed, self.config.sigma)
        suite.add(at_most("kernel_reality", "equal-time kernel is real", audit.imaginary_fraction, 1e-10))
        suite.add(at_most("kernel_exchange", "alpha_kl(rho) = alpha_lk(-rho)", audit.exchange_defect, 1e-10))
        suite.add(at_most("kernel_parity", "kernel is a pseudotensor", audit.parity_defect, 1e-10))
        suite.add(at_least("kernel_AU_fraction", "only the AU part survives", audit.au_fraction, 1.0 - 1e-8))
        suite.add(at_most("kernel_vector", "alpha_s is the smeared delta gradient", audit.vector_error, 1e-6))
        suite.add(at_most("kernel_vector_odd", "alpha_s(-rho) = -alpha_s(rho)", audit.vector_oddness, 1e-10))

    def run_commutators(self) -> SuiteResult:
        suite = SuiteResult("commutators")
        self._equal_time_checks(suite)
        self._pauli_jordan_checks(suite)
        self._unequal_time_checks(suite)
        self._field_equation_checks(suite)
        return suite

    def run(self, names: List[str]) -> List[SuiteResult]:
        results = []
        for name in names:
            if name not in self.runners:
                continue
            self.logger.info(f"Running suite: {name}")
            results.append(self.runners[name]())
        return results
