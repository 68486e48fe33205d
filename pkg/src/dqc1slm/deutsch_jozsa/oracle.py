"""
Deutsch-Jozsa Oracle Test

A {0, pi} phase mask is an oracle f: pixel -> {0, 1}. Its weighted trace
is +-(1 - 2p) for a constant oracle and 0 for a balanced one on a flat beam,
so measuring <sigma_x> and thresholding it decides the promise problem.
"""

import logging
import math
from typing import Optional, Union

from ..config.simulation_config_manager import get_simulation_config
from ..data_models.domain_models_core import CellSpec, IntensityProfile, PanelDims, PhaseMask
from ..data_models.domain_models_measurement import MeasurementConfig, OracleVerdict, PauliAxis, Verdict
from ..dqc1_core.analytic import DephasingLike, analytic_trace, as_dephasing
from ..exceptions import BadThreshold, NonBooleanMask, ValidationError
from ..measurement_sim.simulator import sample_basis
from ..phase_mask.masks import make_constant, make_random_balanced, phase_census

logger = logging.getLogger(__name__)


def default_threshold(p: DephasingLike) -> float:
    """Configured threshold, or (1 - 2p) / 2 halfway between the outcomes"""
    return get_simulation_config().oracle.threshold_for(as_dephasing(p).p)


def check_boolean(mask: PhaseMask, tolerance: Optional[float] = None) -> None:
    """
    Raises:
        NonBooleanMask: if any pixel is neither 0 nor pi within tolerance
    """
    if tolerance is None:
        tolerance = get_simulation_config().oracle.boolean_tolerance
    n_zero, n_pi, n_other = phase_census(mask, tolerance)
    if n_other:
        raise NonBooleanMask(f"{n_other} pixel(s) carry a phase other than 0 or pi")
    logger.debug(f"Oracle census: {n_zero} pixels at 0, {n_pi} at pi")


def run_dj(
    mask: PhaseMask,
    profile: IntensityProfile,
    p: DephasingLike,
    config: Optional[MeasurementConfig] = None,
    threshold: Optional[float] = None,
    analytic: bool = False,
    tolerance: Optional[float] = None,
    threads: Optional[int] = None,
) -> OracleVerdict:
    """
    Decide constant vs balanced from the measured <sigma_x>

    Args:
        mask: {0, pi}-valued oracle mask
        profile: Beam weights
        p: Dephasing parameter
        config: Photon budget (None -> configured defaults); unused when analytic
        threshold: Decision threshold in (0, 1) (None -> default_threshold(p))
        analytic: Use the exact statistic instead of simulated photons
        tolerance: Boolean-phase tolerance (None -> configuration)
        threads: Worker count

    Raises:
        NonBooleanMask: if a phase is neither 0 nor pi
        BadThreshold: if threshold is outside (0, 1)
        DimsMismatch: if the panels differ
    """
    dephasing = as_dephasing(p)
    if threshold is None:
        threshold = default_threshold(dephasing)
    if not 0.0 < threshold < 1.0:
        raise BadThreshold(f"threshold must lie in (0, 1), got {threshold}")
    check_boolean(mask, tolerance)

    if analytic:
        statistic = analytic_trace(mask, profile, dephasing, threads=threads).re
        verdict = OracleVerdict.classify(statistic, threshold)
    else:
        if config is None:
            defaults = get_simulation_config().measurement
            config = MeasurementConfig(defaults.photons_per_basis, defaults.seed, defaults.mode)
        record = sample_basis(mask, profile, dephasing, PauliAxis.X, config, threads=threads)
        statistic = record.expectation
        stderr = math.sqrt(max(0.0, 1.0 - statistic * statistic) / record.photons)
        verdict = OracleVerdict.classify(statistic, threshold, photons_used=record.photons, stderr=stderr)

    logger.info(f"DJ verdict {verdict.verdict.value}: statistic={verdict.statistic:.6f}, threshold={threshold}")
    return verdict


def make_oracle(
    kind: Union[str, Verdict], dims: PanelDims, cells: Optional[CellSpec] = None, seed: int = 0
) -> PhaseMask:
    """
    Oracle mask of the given class

    Args:
        kind: constant_plus (all 0), constant_minus (all pi) or balanced
        dims: Panel dimensions
        cells: Cell size of a balanced oracle (default 1x1)
        seed: Placement seed of a balanced oracle
    """
    try:
        kind = Verdict(kind)
    except ValueError as e:
        raise ValidationError(f"unknown oracle kind: {kind}") from e

    if kind is Verdict.CONSTANT_PLUS:
        return make_constant(dims, 0.0)
    if kind is Verdict.CONSTANT_MINUS:
        return make_constant(dims, math.pi)
    return make_random_balanced(dims, cells or CellSpec.square(1), seed)
