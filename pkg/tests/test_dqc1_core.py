"""
Tests for the analytic DQC1 engine
"""

import cmath
import math

import numpy as np
import pytest

from dqc1slm.beam_profile import flat
from dqc1slm.data_models import DephasingParam, PanelDims, PauliAxis, RampFactory
from dqc1slm.dqc1_core import (
    analytic_trace,
    apply_slm,
    bloch_vector,
    dephase,
    exact_normalized_trace,
    expectation,
    input_state,
)
from dqc1slm.exceptions import BadDephasing, DimsMismatch
from dqc1slm.phase_mask import make_constant, make_half_split, make_linear_ramp


def naive_trace(mask, profile, p):
    """Pixel-by-pixel (1 - 2p) sum c exp(i phi) with plain Python arithmetic"""
    total = 0j
    for c, phi in zip(profile.weights.ravel().tolist(), mask.phases.ravel().tolist()):
        total += c * cmath.exp(1j * phi)
    return (1 - 2 * p) * total


class TestExactTrace:
    """Test the flat-beam, noise-free reference trace"""

    @pytest.mark.parametrize("ramp", RampFactory.create_reference_ramps(), ids=lambda r: r.label)
    def test_reference_ramps(self, full_hd_dims, ramp):
        """Test the four benchmark ramps on the 1920 x 1080 panel"""
        mask = make_linear_ramp(full_hd_dims, ramp.phi_start, ramp.phi_end)
        trace = exact_normalized_trace(mask)
        assert trace.real == pytest.approx(ramp.reference_re, abs=0.012)
        assert trace.imag == pytest.approx(ramp.reference_im, abs=0.012)

    def test_continuum_limits(self, full_hd_dims):
        """Test ramps approach their continuum integrals"""
        trace = exact_normalized_trace(make_linear_ramp(full_hd_dims, math.pi, 2 * math.pi))
        assert trace.imag == pytest.approx(-2 / math.pi, abs=1e-3)
        trace = exact_normalized_trace(make_linear_ramp(full_hd_dims, 3 * math.pi / 4, 5 * math.pi / 4))
        assert trace.real == pytest.approx(-2 * math.sqrt(2) / math.pi, abs=1e-3)

    def test_constant_masks(self, tiny_dims):
        """Test constant phases give exp(i phi)"""
        assert exact_normalized_trace(make_constant(tiny_dims, 0.0)) == 1.0
        assert exact_normalized_trace(make_constant(tiny_dims, math.pi)).real == -1.0

    def test_flat_consistency(self, random_mask, small_dims):
        """Test analytic_trace with a flat beam and p = 0 matches the exact trace"""
        mask = random_mask(small_dims)
        estimate = analytic_trace(mask, flat(small_dims), 0.0)
        reference = exact_normalized_trace(mask)
        assert estimate.re == pytest.approx(reference.real, abs=1e-14)
        assert estimate.im == pytest.approx(reference.imag, abs=1e-14)


class TestAnalyticTrace:
    """Test the dephasing- and intensity-weighted trace"""

    def test_matches_naive_evaluator(self, random_mask, random_profile, small_dims):
        """Test agreement with a pixel loop on 20 random masks and beams"""
        for _ in range(20):
            mask, profile = random_mask(small_dims), random_profile(small_dims)
            estimate = analytic_trace(mask, profile, 0.08)
            reference = naive_trace(mask, profile, 0.08)
            assert abs(estimate.re - reference.real) <= 1e-12
            assert abs(estimate.im - reference.imag) <= 1e-12

    @pytest.mark.parametrize("p", [0.0, 0.04, 0.08, 0.25, 0.5])
    def test_dephasing_factorizes(self, random_mask, random_profile, p):
        """Test trace(p) == (1 - 2p) * trace(0) bit for bit"""
        dims = PanelDims(32, 24)
        factor = DephasingParam(p).coherence_factor
        for _ in range(50):
            mask, profile = random_mask(dims), random_profile(dims)
            noiseless = analytic_trace(mask, profile, 0.0)
            noisy = analytic_trace(mask, profile, p)
            assert noisy.re == factor * noiseless.re
            assert noisy.im == factor * noiseless.im

    def test_constant_oracles(self, flat_small):
        """Test constant masks give +/-(1 - 2p) on sigma_x"""
        dims = flat_small.dims
        assert analytic_trace(make_constant(dims, 0.0), flat_small, 0.08).re == pytest.approx(0.84)
        assert analytic_trace(make_constant(dims, math.pi), flat_small, 0.08).re == pytest.approx(-0.84)

    def test_half_split_balanced(self, flat_small):
        """Test a 0/pi split of a flat beam cancels"""
        estimate = analytic_trace(make_half_split(flat_small.dims, 0.0, math.pi), flat_small, 0.08)
        assert estimate.re == pytest.approx(0.0, abs=1e-15)
        assert estimate.im == pytest.approx(0.0, abs=1e-15)

    def test_conjugate_mask(self, random_mask, random_profile, small_dims):
        """Test negating phases conjugates the trace"""
        mask, profile = random_mask(small_dims), random_profile(small_dims)
        direct = analytic_trace(mask, profile, 0.1)
        conjugate = analytic_trace(mask.conjugate(), profile, 0.1)
        assert conjugate.re == pytest.approx(direct.re, abs=1e-14)
        assert conjugate.im == pytest.approx(-direct.im, abs=1e-14)

    def test_weights_shift_the_trace(self, gaussian_small, quarter_ramp_small):
        """Test a centered beam emphasizes the middle of the ramp"""
        estimate = analytic_trace(quarter_ramp_small, gaussian_small, 0.0)
        middle = 3 * math.pi / 4
        assert math.atan2(estimate.im, estimate.re) == pytest.approx(middle, abs=0.02)

    def test_dims_mismatch(self, tiny_dims, flat_small):
        """Test mask and profile must share a panel"""
        with pytest.raises(DimsMismatch):
            analytic_trace(make_constant(tiny_dims, 0.0), flat_small, 0.0)

    def test_bad_dephasing(self, flat_small):
        """Test p outside [0, 1/2] is rejected"""
        with pytest.raises(BadDephasing):
            analytic_trace(make_constant(flat_small.dims, 0.0), flat_small, 0.6)

    def test_no_systematics_without_levels(self, flat_small, quarter_ramp_small):
        """Test analytic results carry no error bars by default"""
        estimate = analytic_trace(quarter_ramp_small, flat_small, DephasingParam(0.08))
        assert (estimate.sys_err_re, estimate.sys_err_im, estimate.photons_used) == (0.0, 0.0, 0)


class TestPolarizationState:
    """Test the density-matrix view of the control qubit"""

    def test_input_state(self):
        """Test |+><+| points along +x"""
        rho = input_state()
        assert bloch_vector(rho) == (1.0, 0.0, 0.0)
        assert rho.purity == pytest.approx(1.0)

    def test_full_dephasing(self):
        """Test p = 1/2 leaves the maximally mixed state"""
        rho = dephase(input_state(), 0.5)
        assert bloch_vector(rho) == (0.0, 0.0, 0.0)
        assert rho.purity == pytest.approx(0.5)

    def test_apply_slm_matches_trace(self, quarter_ramp_small, gaussian_small):
        """Test <sigma_x> + i<sigma_y> of the output state equals the analytic trace"""
        rho = apply_slm(quarter_ramp_small, gaussian_small, 0.08)
        estimate = analytic_trace(quarter_ramp_small, gaussian_small, 0.08)
        assert expectation(rho, PauliAxis.X) == pytest.approx(estimate.re, abs=1e-15)
        assert expectation(rho, PauliAxis.Y) == pytest.approx(estimate.im, abs=1e-15)
        assert expectation(rho, PauliAxis.Z) == 0.0

    def test_output_is_valid(self, random_mask, random_profile, small_dims):
        """Test Hermitian, unit trace, positive output"""
        rho = apply_slm(random_mask(small_dims), random_profile(small_dims), 0.04)
        eigenvalues = np.linalg.eigvalsh(rho.as_matrix())
        assert np.trace(rho.as_matrix()).real == pytest.approx(1.0)
        assert eigenvalues.min() >= -1e-12
