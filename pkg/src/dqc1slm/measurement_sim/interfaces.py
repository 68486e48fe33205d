"""
Photon sampler interface definitions

A sampler turns a photon budget into the number of '+' outcomes of a
projective polarization measurement in one basis. Implementations differ in
how they model a photon; all share the same outcome distribution.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..data_models.domain_models_core import IntensityProfile, PhaseMask
from ..data_models.domain_models_measurement import PauliAxis, SamplingMode
from ..dqc1_core.analytic import weighted_phase_sums


@dataclass(frozen=True, eq=False)
class BasisModel:
    """Everything needed to measure one basis of the post-SLM state"""

    mask: PhaseMask
    profile: IntensityProfile
    coherence_factor: float  # 1 - 2p
    basis: PauliAxis

    @cached_property
    def expectation(self) -> float:
        """Analytic <sigma_basis>"""
        cos_sum, sin_sum = weighted_phase_sums(self.mask, self.profile)
        return self.coherence_factor * (cos_sum if self.basis is PauliAxis.X else sin_sum)

    @property
    def plus_probability(self) -> float:
        """q = (1 + s) / 2, clipped against rounding past [0, 1]"""
        return min(1.0, max(0.0, 0.5 * (1.0 + self.expectation)))

    def pixel_plus_probability(self, pixels: np.ndarray) -> np.ndarray:
        """Outcome probability for photons landing on the given flat pixel indices"""
        phases = self.mask.phases.ravel()[pixels]
        projection = np.cos(phases) if self.basis is PauliAxis.X else np.sin(phases)
        return 0.5 * (1.0 + self.coherence_factor * projection)


class PhotonSampler(ABC):
    """
    Abstract interface for finite-photon measurement

    Implementations must be stateless apart from caches so one instance can
    serve concurrent shards.
    """

    mode: SamplingMode

    @abstractmethod
    def count_plus(self, model: BasisModel, photons: int, rng: np.random.Generator) -> int:
        """
        Number of '+' outcomes among `photons` measurements

        Args:
            model: State and basis being measured
            photons: Photons in this shard (>= 1)
            rng: Generator dedicated to this shard

        Returns:
            Count in [0, photons]
        """
        pass
