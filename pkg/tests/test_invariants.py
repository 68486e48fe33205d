"""
Property tests over randomized 8 x 8 panels
"""

import cmath

import numpy as np
import pytest

from dqc1slm.data_models import IntensityProfile, MeasurementConfig, PanelDims, PauliAxis, PhaseMask
from dqc1slm.dqc1_core import analytic_trace, apply_slm, bloch_vector
from dqc1slm.measurement_sim import sample_basis
from dqc1slm.phase_mask import quantize

CASES = 1000
DIMS = PanelDims(8, 8)


@pytest.fixture
def cases(rng):
    """Random (mask, profile, p) triples"""

    def generate():
        for _ in range(CASES):
            weights = rng.random(DIMS.shape)
            weights[rng.random(DIMS.shape) < 0.2] = 0.0
            weights[0, 0] += 1e-3
            yield (
                PhaseMask(dims=DIMS, phases=rng.uniform(-10.0, 10.0, size=DIMS.shape)),
                IntensityProfile(dims=DIMS, weights=weights / weights.sum()),
                float(rng.uniform(0.0, 0.5)),
            )

    return generate


class TestInvariants:
    """Properties that hold for every mask, beam and dephasing"""

    def test_bloch_bound(self, cases):
        """Test |trace| never exceeds 1 - 2p"""
        for mask, profile, p in cases():
            estimate = analytic_trace(mask, profile, p)
            assert abs(estimate.value) <= (1 - 2 * p) + 1e-12

    def test_conjugation(self, cases):
        """Test negated phases conjugate the trace"""
        for mask, profile, p in cases():
            direct = analytic_trace(mask, profile, p).value
            conjugate = analytic_trace(mask.conjugate(), profile, p).value
            assert abs(conjugate - direct.conjugate()) <= 1e-13

    def test_global_phase(self, cases, rng):
        """Test a uniform shift alpha multiplies the trace by exp(i alpha)"""
        for mask, profile, p in cases():
            alpha = float(rng.uniform(0.0, 2 * np.pi))
            direct = analytic_trace(mask, profile, p).value
            shifted = analytic_trace(mask.shifted(alpha), profile, p).value
            assert abs(shifted - cmath.exp(1j * alpha) * direct) <= 1e-13

    def test_density_matrix_validity(self, cases):
        """Test the output state is Hermitian, unit trace and positive"""
        for mask, profile, p in cases():
            rho = apply_slm(mask, profile, p)
            matrix = rho.as_matrix()
            assert np.allclose(matrix, matrix.conj().T, rtol=0, atol=1e-15)
            assert abs(np.trace(matrix) - 1.0) <= 1e-12
            assert np.linalg.eigvalsh(matrix).min() >= -1e-12
            x, y, z = bloch_vector(rho)
            assert x * x + y * y + z * z <= 1.0 + 1e-12

    def test_quantization_idempotent(self, cases, rng):
        """Test quantizing twice changes nothing"""
        for mask, _, _ in cases():
            levels = int(rng.integers(2, 1025))
            once = quantize(mask, levels)
            assert quantize(once, levels).equals(once)

    def test_seeded_determinism(self, cases, rng):
        """Test equal seeds give equal tallies"""
        for mask, profile, p in cases():
            config = MeasurementConfig(100, seed=int(rng.integers(0, 2**31)))
            first = sample_basis(mask, profile, p, PauliAxis.Y, config)
            second = sample_basis(mask, profile, p, PauliAxis.Y, config)
            assert first == second
