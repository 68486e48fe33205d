"""
Photon samplers

BinomialSampler draws the '+' count directly from Binomial(N, q).
PerPhotonSampler follows each photon: a pixel drawn from the beam profile,
then a Bernoulli outcome with that pixel's probability. Averaged over the
pixel draw the outcome probability is q in both cases.
"""

import logging

import numpy as np

from ..data_models.domain_models_measurement import SamplingMode
from .alias_table import alias_table_for
from .interfaces import BasisModel, PhotonSampler

logger = logging.getLogger(__name__)

# per_photon works through a shard in blocks to bound memory
PHOTON_BLOCK = 1 << 18


class BinomialSampler(PhotonSampler):
    """n_plus ~ Binomial(N, q)"""

    mode = SamplingMode.BINOMIAL

    def count_plus(self, model: BasisModel, photons: int, rng: np.random.Generator) -> int:
        return int(rng.binomial(photons, model.plus_probability))


class PerPhotonSampler(PhotonSampler):
    """Pixel from the beam via an alias table, then the pixel's outcome"""

    mode = SamplingMode.PER_PHOTON

    def count_plus(self, model: BasisModel, photons: int, rng: np.random.Generator) -> int:
        table = alias_table_for(model.profile)
        plus = 0
        remaining = photons
        while remaining > 0:
            block = min(remaining, PHOTON_BLOCK)
            pixels = table.sample(block, rng)
            plus += int(np.count_nonzero(rng.random(block) < model.pixel_plus_probability(pixels)))
            remaining -= block
        return plus


class SamplerFactory:
    """Maps a SamplingMode to its sampler"""

    @staticmethod
    def create(mode: SamplingMode) -> PhotonSampler:
        if mode is SamplingMode.PER_PHOTON:
            return PerPhotonSampler()
        return BinomialSampler()
