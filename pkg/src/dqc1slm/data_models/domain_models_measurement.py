"""
DQC1 SLM Measurement Models

The polarization (control) qubit, the noise model acting on it, and the
results of reading it out: trace estimates, photon counts and oracle verdicts.
"""

import math
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from ..exceptions import BadDephasing, BadPhotonBudget, InvalidDensityMatrix, ValidationError

DENSITY_TOLERANCE = 1e-12


class PauliAxis(Enum):
    """Pauli observables on the polarization qubit"""

    X = "X"
    Y = "Y"
    Z = "Z"


class SamplingMode(Enum):
    """How photon outcomes are drawn"""

    BINOMIAL = "binomial"  # one binomial draw per shard
    PER_PHOTON = "per_photon"  # pixel from the beam, then a Bernoulli outcome


class Verdict(Enum):
    """Deutsch-Jozsa decision"""

    CONSTANT_PLUS = "constant_plus"
    CONSTANT_MINUS = "constant_minus"
    BALANCED = "balanced"


@dataclass(frozen=True)
class DephasingParam:
    """Polarization dephasing; coherences shrink by (1 - 2p)"""

    p: float

    def __post_init__(self):
        p = float(self.p)
        if not (0.0 <= p <= 0.5):
            raise BadDephasing(f"dephasing p must lie in [0, 1/2], got {self.p}")
        object.__setattr__(self, "p", p)

    @property
    def coherence_factor(self) -> float:
        return 1.0 - 2.0 * self.p


@dataclass(frozen=True)
class PolarizationDensityMatrix:
    """
    2x2 density matrix of the control qubit in the basis {|H>, |V>}

    Validated on construction: Hermitian, unit trace, positive semidefinite
    (all within 1e-12).
    """

    rho_hh: complex
    rho_hv: complex
    rho_vh: complex
    rho_vv: complex

    def __post_init__(self):
        hh, hv, vh, vv = (complex(v) for v in (self.rho_hh, self.rho_hv, self.rho_vh, self.rho_vv))
        if abs(hh.imag) > DENSITY_TOLERANCE or abs(vv.imag) > DENSITY_TOLERANCE:
            raise InvalidDensityMatrix("diagonal entries must be real")
        if abs(vh - hv.conjugate()) > DENSITY_TOLERANCE:
            raise InvalidDensityMatrix("matrix is not Hermitian")
        if abs(hh.real + vv.real - 1.0) > DENSITY_TOLERANCE:
            raise InvalidDensityMatrix(f"trace is {hh.real + vv.real}, expected 1")
        if hh.real * vv.real - abs(hv) ** 2 < -DENSITY_TOLERANCE or min(hh.real, vv.real) < -DENSITY_TOLERANCE:
            raise InvalidDensityMatrix("matrix is not positive semidefinite")

    @classmethod
    def from_coherence(cls, coherence: complex) -> "PolarizationDensityMatrix":
        """Equal populations with the given rho_HV"""
        coherence = complex(coherence)
        return cls(rho_hh=0.5, rho_hv=coherence, rho_vh=coherence.conjugate(), rho_vv=0.5)

    def as_matrix(self) -> np.ndarray:
        return np.array([[self.rho_hh, self.rho_hv], [self.rho_vh, self.rho_vv]], dtype=np.complex128)

    @property
    def purity(self) -> float:
        """Tr(rho^2)"""
        return float(abs(self.rho_hh) ** 2 + abs(self.rho_vv) ** 2 + 2.0 * abs(self.rho_hv) ** 2)


@dataclass(frozen=True)
class TraceEstimate:
    """
    Normalized-trace estimate re + i*im = <sigma_x> + i<sigma_y>

    photons_used is 0 for analytic results.
    """

    re: float
    im: float
    stat_err_re: float = 0.0
    stat_err_im: float = 0.0
    sys_err_re: float = 0.0
    sys_err_im: float = 0.0
    photons_used: int = 0

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    @property
    def total_err_re(self) -> float:
        return math.hypot(self.stat_err_re, self.sys_err_re)

    @property
    def total_err_im(self) -> float:
        return math.hypot(self.stat_err_im, self.sys_err_im)

    def with_systematics(self, sys_err_re: float, sys_err_im: float) -> "TraceEstimate":
        return replace(self, sys_err_re=float(sys_err_re), sys_err_im=float(sys_err_im))


@dataclass(frozen=True)
class MeasurementConfig:
    """Photon budget and randomness of a simulated measurement"""

    photons_per_basis: int
    seed: int = 0
    mode: SamplingMode = SamplingMode.BINOMIAL

    def __post_init__(self):
        if int(self.photons_per_basis) < 1:
            raise BadPhotonBudget(f"photons_per_basis must be >= 1, got {self.photons_per_basis}")
        if isinstance(self.mode, str):
            object.__setattr__(self, "mode", SamplingMode(self.mode))
        object.__setattr__(self, "photons_per_basis", int(self.photons_per_basis))


@dataclass(frozen=True)
class CountRecord:
    """Outcome tallies of N projective measurements in one basis"""

    basis: PauliAxis
    n_plus: int
    n_minus: int

    def __post_init__(self):
        if self.basis not in (PauliAxis.X, PauliAxis.Y):
            raise ValidationError("counts are recorded in the X or Y basis only")
        if self.n_plus < 0 or self.n_minus < 0 or self.n_plus + self.n_minus < 1:
            raise ValidationError("count record needs nonnegative tallies and at least one photon")

    @property
    def photons(self) -> int:
        return self.n_plus + self.n_minus

    @property
    def expectation(self) -> float:
        return (self.n_plus - self.n_minus) / self.photons


@dataclass(frozen=True)
class OracleVerdict:
    """Constant / balanced decision with the statistic behind it"""

    verdict: Verdict
    statistic: float  # measured <sigma_x>
    threshold: float
    photons_used: int = 0
    stderr: float = 0.0

    @classmethod
    def classify(
        cls, statistic: float, threshold: float, photons_used: int = 0, stderr: float = 0.0
    ) -> "OracleVerdict":
        """Apply the threshold rule to a measured statistic"""
        if statistic > threshold:
            verdict = Verdict.CONSTANT_PLUS
        elif statistic < -threshold:
            verdict = Verdict.CONSTANT_MINUS
        else:
            verdict = Verdict.BALANCED
        return cls(
            verdict=verdict,
            statistic=float(statistic),
            threshold=float(threshold),
            photons_used=int(photons_used),
            stderr=float(stderr),
        )

    @property
    def is_constant(self) -> bool:
        return self.verdict is not Verdict.BALANCED
