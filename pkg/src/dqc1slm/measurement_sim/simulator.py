"""
Finite-photon measurement simulator

Spends an independent budget of N photons on each of the sigma_x and
sigma_y bases. The budget is cut into fixed-size shards; shard k of basis b
draws from its own PCG64 stream seeded by SeedSequence(seed, spawn_key=(b, k)),
and shard counts are summed, so totals depend only on the seed.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

import numpy as np

from ..config.simulation_config_manager import get_simulation_config, resolve_thread_count
from ..data_models.domain_models_core import IntensityProfile, PhaseMask
from ..data_models.domain_models_measurement import CountRecord, MeasurementConfig, PauliAxis, TraceEstimate
from ..dqc1_core.analytic import DephasingLike, as_dephasing, check_dims
from ..exceptions import ValidationError
from .interfaces import BasisModel
from .samplers import SamplerFactory

logger = logging.getLogger(__name__)

BASIS_STREAMS = {PauliAxis.X: 0, PauliAxis.Y: 1}


def derive_seed(master: int, *keys: int) -> int:
    """
    Deterministic child seed for (master, keys...)

    Args:
        master: Master seed (>= 0)
        keys: Any number of nonnegative integers naming the child

    Returns:
        32-bit nonnegative seed
    """
    sequence = np.random.SeedSequence(int(master), spawn_key=tuple(int(k) for k in keys))
    return int(sequence.generate_state(1, dtype=np.uint32)[0])


def shard_sizes(photons: int, shard_photons: int) -> List[int]:
    """Split a budget into full shards plus a remainder"""
    full, rest = divmod(photons, shard_photons)
    return [shard_photons] * full + ([rest] if rest else [])


def shard_generator(seed: int, basis: PauliAxis, shard: int) -> np.random.Generator:
    """PCG64 stream for one shard of one basis"""
    sequence = np.random.SeedSequence(int(seed), spawn_key=(BASIS_STREAMS[basis], shard))
    return np.random.Generator(np.random.PCG64(sequence))


def sample_basis(
    mask: PhaseMask,
    profile: IntensityProfile,
    p: DephasingLike,
    basis: PauliAxis,
    config: MeasurementConfig,
    threads: Optional[int] = None,
    shard_photons: Optional[int] = None,
) -> CountRecord:
    """
    Simulate N projective measurements of sigma_x or sigma_y

    Args:
        mask: Encoded phase map
        profile: Beam weights
        p: Dephasing parameter
        basis: PauliAxis.X or PauliAxis.Y
        config: Photon budget, seed and sampling mode
        threads: Worker count across shards
        shard_photons: Photons per shard (None -> configuration)

    Raises:
        DimsMismatch: if the panels differ
    """
    check_dims(mask, profile)
    model = BasisModel(mask=mask, profile=profile, coherence_factor=as_dephasing(p).coherence_factor, basis=basis)
    return _count_basis(model, config, threads, shard_photons)


def _count_basis(
    model: BasisModel, config: MeasurementConfig, threads: Optional[int], shard_photons: Optional[int]
) -> CountRecord:
    sampler = SamplerFactory.create(config.mode)
    shard = shard_photons or get_simulation_config().measurement.shard_photons
    sizes = shard_sizes(config.photons_per_basis, shard)

    def run_shard(index: int) -> int:
        rng = shard_generator(config.seed, model.basis, index)
        logger.debug(f"Shard {index} of basis {model.basis.value}: {sizes[index]} photons")
        return sampler.count_plus(model, sizes[index], rng)

    workers = min(resolve_thread_count(threads), len(sizes))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            plus_counts = list(pool.map(run_shard, range(len(sizes))))
    else:
        plus_counts = [run_shard(index) for index in range(len(sizes))]

    n_plus = sum(plus_counts)
    return CountRecord(basis=model.basis, n_plus=n_plus, n_minus=config.photons_per_basis - n_plus)


def estimate_from_counts(x: CountRecord, y: CountRecord) -> TraceEstimate:
    """
    Trace estimate from sigma_x and sigma_y tallies

    Each component is (n+ - n-) / N with plug-in standard error
    sqrt((1 - s^2) / N).
    """
    if x.basis is not PauliAxis.X or y.basis is not PauliAxis.Y:
        raise ValidationError("estimate_from_counts expects an X record and a Y record")

    def standard_error(record: CountRecord) -> float:
        value = record.expectation
        return math.sqrt(max(0.0, 1.0 - value * value) / record.photons)

    return TraceEstimate(
        re=x.expectation,
        im=y.expectation,
        stat_err_re=standard_error(x),
        stat_err_im=standard_error(y),
        photons_used=x.photons + y.photons,
    )


def monte_carlo_trace(
    mask: PhaseMask,
    profile: IntensityProfile,
    p: DephasingLike,
    config: MeasurementConfig,
    threads: Optional[int] = None,
    shard_photons: Optional[int] = None,
) -> TraceEstimate:
    """
    Monte Carlo estimate of <sigma_x> + i<sigma_y> with 2N photons

    Raises:
        DimsMismatch: if the panels differ
    """
    x = sample_basis(mask, profile, p, PauliAxis.X, config, threads=threads, shard_photons=shard_photons)
    y = sample_basis(mask, profile, p, PauliAxis.Y, config, threads=threads, shard_photons=shard_photons)
    estimate = estimate_from_counts(x, y)
    logger.info(
        f"Monte Carlo trace ({config.mode.value}, N={config.photons_per_basis}, seed={config.seed}): "
        f"({estimate.re:.6f} +/- {estimate.stat_err_re:.6f}, {estimate.im:.6f} +/- {estimate.stat_err_im:.6f})"
    )
    return estimate
