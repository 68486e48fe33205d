"""Finite-photon polarization measurement simulation"""

from .alias_table import AliasTable, alias_table_for
from .interfaces import BasisModel, PhotonSampler
from .samplers import BinomialSampler, PerPhotonSampler, SamplerFactory
from .simulator import derive_seed, estimate_from_counts, monte_carlo_trace, sample_basis, shard_sizes

__all__ = [
    "AliasTable",
    "BasisModel",
    "BinomialSampler",
    "PerPhotonSampler",
    "PhotonSampler",
    "SamplerFactory",
    "alias_table_for",
    "derive_seed",
    "estimate_from_counts",
    "monte_carlo_trace",
    "sample_basis",
    "shard_sizes",
]
