import math

import numpy as np
import pytest

from nonlinosc.errors import UnphysicalCovarianceError
from nonlinosc.measures import (
    bures_distance,
    eta_bures,
    eta_ng,
    fidelity_pure,
    measure_report,
    reference_gaussian,
    wigner_gaussian,
    wigner_normalization_check,
)
from nonlinosc.numerics import (
    CovarianceMatrix,
    Grid,
    SampledWavefunction,
    auto_grid,
    covariance_of,
    normalize,
    sample_ground_state,
)
from nonlinosc.oracle import fd_ground_state
from nonlinosc.potentials import (
    FellowsSmith,
    Harmonic,
    ModifiedIsotonic,
    ModifiedPoschlTeller,
    Morse,
    PerturbedHarmonic,
)
from nonlinosc.specfun import entropy_h


class TestFidelityAndBures:
    def test_self_fidelity(self):
        wf = sample_ground_state(Harmonic(1.0), auto_grid(Harmonic(1.0)))
        assert fidelity_pure(wf, wf) == pytest.approx(1.0, abs=1e-9)

    def test_gaussian_pair(self):
        grid = auto_grid(Harmonic(1.0))
        wf1 = sample_ground_state(Harmonic(1.0), grid)
        wf4 = sample_ground_state(Harmonic(4.0), grid)
        assert fidelity_pure(wf1, wf4) == pytest.approx(0.8, abs=1e-9)

    def test_opposite_parity(self):
        grid = Grid(-12.0, 12.0, 4097)
        x = grid.points()
        even = normalize(SampledWavefunction(grid, np.exp(-(x**2) / 2.0), False, 0.0))
        odd = normalize(SampledWavefunction(grid, x * np.exp(-(x**2) / 2.0), False, 0.0))
        assert fidelity_pure(even, odd) == pytest.approx(0.0, abs=1e-15)

    @pytest.mark.parametrize("f,expected", [(1.0, 0.0), (0.0, math.sqrt(2.0)), (0.25, 1.0)])
    def test_bures_distance_values(self, f, expected):
        assert bures_distance(f) == pytest.approx(expected, abs=1e-12)

    def test_bures_clamps_and_decreases(self):
        assert bures_distance(1.0 + 1e-9) == 0.0
        grid = np.linspace(0.0, 1.0, 33)
        values = [bures_distance(float(f)) for f in grid]
        assert all(a > b for a, b in zip(values, values[1:]))


class TestEtaBures:
    @pytest.mark.parametrize("omega", [0.5, 1.0, 4.0])
    def test_harmonic_zero(self, omega):
        assert eta_bures(Harmonic(omega)) <= 1e-6

    def test_small_alpha_morse_vanishing_trend(self):
        # The measure vanishes as alpha -> 0; the minimum-centered reference
        # leaves a residual ~0.33 sqrt(alpha) from the ground-state
        # displacement, so 0.05 is the honest small-alpha bound at 0.01.
        values = [eta_bures(Morse(1.0, a)) for a in (0.005, 0.01, 0.05)]
        assert values[1] <= 0.05
        assert values[0] < values[1] < values[2]

    def test_fellows_smith_absent_without_reference(self):
        assert eta_bures(FellowsSmith(-0.6)) is None
        assert eta_bures(FellowsSmith(-0.9)) is None

    def test_perturbed_closed_form(self):
        spec = PerturbedHarmonic(1.0, 0.0, 0.25)
        alpha2 = -0.125 * 3.0 / math.sqrt(2.0)
        expected = math.sqrt(1.0 - (1.0 + alpha2**2) ** -0.5)
        assert eta_bures(spec) == pytest.approx(expected, rel=1e-12)


class TestEtaNg:
    def test_harmonic_zero(self):
        assert eta_ng(Harmonic(3.0)) <= 1e-6

    def test_mpt_closed_form(self):
        # var_x = pi^2/12 and var_p = 1/3 give sqrt(det) = pi/6.
        assert eta_ng(ModifiedPoschlTeller(1.0, 1.0)) == pytest.approx(
            entropy_h(math.pi / 6.0), abs=1e-5
        )
        assert entropy_h(math.pi / 6.0) == pytest.approx(0.1122893011, abs=1e-9)

    def test_morse_edge_grows_large(self):
        assert eta_ng(Morse(1.0, 2.8)) > 1.0

    def test_perturbed_matches_fock_oracle(self):
        from nonlinosc.oracle import FockState, fock_covariance

        spec = PerturbedHarmonic(1.0, 0.1, -0.2)
        from nonlinosc.perturbation import alpha_coefficients

        state = alpha_coefficients(spec.eps3, spec.eps4, spec.omega)
        cov = fock_covariance(FockState(np.array([1.0, state.alpha1, state.alpha2])))
        assert eta_ng(spec) == pytest.approx(entropy_h(math.sqrt(cov.det)), abs=1e-12)


class TestMeasureReport:
    def test_harmonic_fields(self):
        report = measure_report(Harmonic(1.0))
        assert report.eta_b == pytest.approx(0.0, abs=1e-6)
        assert report.eta_ng == pytest.approx(0.0, abs=1e-6)
        assert report.omega_r == 1.0
        assert report.ground_energy == pytest.approx(0.5)
        assert report.det_sigma == pytest.approx(0.25, abs=1e-9)
        assert report.fidelity_to_reference == pytest.approx(1.0, abs=1e-9)

    def test_mio_fields(self):
        report = measure_report(ModifiedIsotonic(1.0))
        assert report.ground_energy == pytest.approx(-3.5, rel=1e-12)
        assert report.omega_r == pytest.approx(math.sqrt(37.0), rel=1e-12)
        assert report.eta_b > 0.0 and report.eta_ng > 0.0

    def test_fellows_smith_triple_well(self):
        report = measure_report(FellowsSmith(-0.9))
        assert report.eta_b is None
        assert report.fidelity_to_reference is None
        assert report.eta_ng > 0.0

    def test_internal_consistency_eta_ng(self):
        report = measure_report(Morse(1.0, 1.5))
        assert report.eta_ng == pytest.approx(
            entropy_h(math.sqrt(report.det_sigma)), abs=1e-12
        )

    def test_eta_b_present_iff_reference(self):
        for spec in (Harmonic(2.0), Morse(1.0, 1.0), FellowsSmith(-0.05), FellowsSmith(-0.7)):
            report = measure_report(spec)
            assert (report.eta_b is None) == (report.omega_r is None)

    def test_morse_edge_warning(self):
        report = measure_report(Morse(1.0, 2.8))
        assert any("bound-state limit" in w for w in report.diagnostics.warnings)

    def test_perturbed_report(self):
        report = measure_report(PerturbedHarmonic(1.0, 0.0, 0.2))
        assert report.omega_r == 1.0
        assert report.ground_energy == pytest.approx(0.5 + 0.2 * 0.75, rel=1e-12)
        assert report.eta_b > 0.0
        assert report.diagnostics.grid is None

    def test_perturbed_report_honors_loosened_guard(self):
        report = measure_report(PerturbedHarmonic(1.0, 0.6, 0.0, eps_guard=0.7))
        assert report.eta_b > 0.0 and report.eta_ng > 0.0

    def test_deterministic(self):
        a = measure_report(ModifiedIsotonic(3.0))
        b = measure_report(ModifiedIsotonic(3.0))
        assert a == b

    def test_fellows_smith_p_zero_is_harmonic(self):
        # At p = 0 the supersymmetric-partner family collapses onto the
        # omega = 1 harmonic oscillator, so the whole hypergeometric pipeline
        # must reproduce the Gaussian null result.
        report = measure_report(FellowsSmith(0.0))
        assert report.eta_b <= 1e-6
        assert report.eta_ng <= 1e-6
        assert report.omega_r == pytest.approx(1.0, rel=1e-12)
        assert report.ground_energy == pytest.approx(0.5, rel=1e-12)


class TestReferenceGaussian:
    def test_vacuum_pass_through(self):
        cov = CovarianceMatrix(var_x=0.5, var_p=0.5)
        state = reference_gaussian(cov)
        assert state.mean == (0.0, 0.0)
        assert state.covariance is cov

    def test_sech_state_covariance(self):
        spec = ModifiedPoschlTeller(1.0, 1.0)
        cov = covariance_of(sample_ground_state(spec, auto_grid(spec)))
        state = reference_gaussian(cov)
        assert state.covariance.var_x == pytest.approx(math.pi**2 / 12.0, rel=1e-8)
        assert state.covariance.var_p == pytest.approx(1.0 / 3.0, rel=1e-8)

    def test_heisenberg_violation_rejected(self):
        with pytest.raises(UnphysicalCovarianceError):
            reference_gaussian(CovarianceMatrix(var_x=0.4, var_p=0.6))  # det ~ 0.24


class TestWignerGaussian:
    def test_vacuum_at_origin(self):
        state = reference_gaussian(CovarianceMatrix(var_x=0.5, var_p=0.5))
        assert wigner_gaussian(state, (0.0, 0.0)) == pytest.approx(1.0 / math.pi, rel=1e-12)

    def test_peak_value_general(self):
        cov = CovarianceMatrix(var_x=1.1, var_p=0.7, cov_xp=0.2, mean_x=0.3, mean_p=-0.2)
        state = reference_gaussian(cov)
        expected = 1.0 / (2.0 * math.pi * math.sqrt(cov.det))
        assert wigner_gaussian(state, (0.3, -0.2)) == pytest.approx(expected, rel=1e-12)

    def test_vacuum_one_sigma_x(self):
        state = reference_gaussian(CovarianceMatrix(var_x=0.5, var_p=0.5))
        assert wigner_gaussian(state, (1.0, 0.0)) == pytest.approx(
            math.exp(-1.0) / math.pi, rel=1e-12
        )

    def test_normalization_on_plane(self):
        cov = CovarianceMatrix(var_x=0.9, var_p=0.5, cov_xp=0.15, mean_x=1.0, mean_p=-2.0)
        total = wigner_normalization_check(reference_gaussian(cov))
        assert total == pytest.approx(1.0, abs=1e-3)


class TestSymplecticInvariance:
    @pytest.mark.parametrize("omega", [0.1, 1.0, 10.0])
    def test_frequency_invariance(self, omega):
        assert eta_ng(Harmonic(omega)) <= 1e-6

    def test_displaced_gaussian_scores_zero(self):
        grid = Grid(-10.0, 16.0, 4097)
        x = grid.points()
        wf = normalize(
            SampledWavefunction(grid, np.exp(-((x - 3.0) ** 2) / 2.0), False, 0.0)
        )
        det = covariance_of(wf).det
        assert entropy_h(math.sqrt(det)) <= 1e-6


class TestOracleEquivalence:
    @pytest.mark.parametrize(
        "spec",
        [Morse(1.0, 1.0), ModifiedPoschlTeller(1.0, 1.0), ModifiedIsotonic(2.0), FellowsSmith(-0.5)],
    )
    def test_eta_ng_from_fd_state(self, spec):
        grid = auto_grid(spec)
        analytic = entropy_h(math.sqrt(covariance_of(sample_ground_state(spec, grid)).det))
        fd = entropy_h(math.sqrt(covariance_of(fd_ground_state(spec, grid).wavefunction).det))
        assert fd == pytest.approx(analytic, abs=1e-4)
