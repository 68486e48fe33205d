"""
DQC1 Analytic Engine

Evolves the polarization qubit through the SLM's controlled-phase operator

    S = |H><H| (x) U + |V><V| (x) 1,   U = sum exp(-i phi_ij) |ij><ij|

acting on |+><+| (x) rho_t with rho_t the beam's (diagonal) spatial state,
applies polarization dephasing and traces out the spatial register. The
coherence that survives is

    rho_HV = (1 - 2p) / 2 * sum c_ij exp(-i phi_ij)

so <sigma_x> = (1 - 2p) sum c cos(phi) and <sigma_y> = (1 - 2p) sum c sin(phi):
the estimate re + i*im is the weighted normalized trace of exp(+i phi).
"""

import logging
from typing import Optional, Tuple, Union

import numpy as np

from ..data_models.domain_models_core import CountsGrid, IntensityProfile, PhaseMask
from ..data_models.domain_models_measurement import (
    DephasingParam,
    PauliAxis,
    PolarizationDensityMatrix,
    TraceEstimate,
)
from ..exceptions import DimsMismatch
from .summation import compensated_sum

logger = logging.getLogger(__name__)

DephasingLike = Union[float, DephasingParam]


def as_dephasing(p: DephasingLike) -> DephasingParam:
    """Accept a bare float or a DephasingParam"""
    return p if isinstance(p, DephasingParam) else DephasingParam(p)


def check_dims(mask: PhaseMask, profile: IntensityProfile) -> None:
    """Raise DimsMismatch unless mask and profile share a panel"""
    if mask.dims != profile.dims:
        raise DimsMismatch(f"mask panel {mask.dims} does not match profile panel {profile.dims}")


def weighted_phase_sums(
    mask: PhaseMask, profile: IntensityProfile, threads: Optional[int] = None
) -> Tuple[float, float]:
    """
    (sum c_ij cos(phi_ij), sum c_ij sin(phi_ij)) with compensated summation

    Raises:
        DimsMismatch: if the panels differ
    """
    check_dims(mask, profile)
    weights = profile.weights
    cos_sum = compensated_sum(weights * np.cos(mask.phases), threads=threads)
    sin_sum = compensated_sum(weights * np.sin(mask.phases), threads=threads)
    return cos_sum, sin_sum


def input_state() -> PolarizationDensityMatrix:
    """Pure control qubit |+><+| = (|H> + |V>)(<H| + <V|) / 2"""
    return PolarizationDensityMatrix.from_coherence(0.5)


def dephase(rho: PolarizationDensityMatrix, p: DephasingLike) -> PolarizationDensityMatrix:
    """Dephasing channel: populations kept, coherences scaled by (1 - 2p)"""
    factor = as_dephasing(p).coherence_factor
    return PolarizationDensityMatrix(
        rho_hh=rho.rho_hh,
        rho_hv=factor * complex(rho.rho_hv),
        rho_vh=factor * complex(rho.rho_vh),
        rho_vv=rho.rho_vv,
    )


def apply_slm(
    mask: PhaseMask,
    profile: IntensityProfile,
    p: DephasingLike,
    threads: Optional[int] = None,
) -> PolarizationDensityMatrix:
    """
    Polarization state after the SLM, dephasing and the spatial partial trace

    Raises:
        DimsMismatch: if the panels differ
    """
    cos_sum, sin_sum = weighted_phase_sums(mask, profile, threads=threads)
    # |H> picks up exp(-i phi) on every pixel; weights are the spatial populations
    modulated = input_state()
    coherence = complex(modulated.rho_hv) * complex(cos_sum, -sin_sum)
    ideal = PolarizationDensityMatrix.from_coherence(coherence)
    return dephase(ideal, p)


def expectation(rho: PolarizationDensityMatrix, axis: PauliAxis) -> float:
    """
    Pauli expectation value

    <sigma_x> = 2 Re(rho_HV), <sigma_y> = 2 Im(rho_VH), <sigma_z> = rho_HH - rho_VV
    """
    if axis is PauliAxis.X:
        return 2.0 * complex(rho.rho_hv).real
    if axis is PauliAxis.Y:
        return 2.0 * complex(rho.rho_vh).imag
    return complex(rho.rho_hh).real - complex(rho.rho_vv).real


def bloch_vector(rho: PolarizationDensityMatrix) -> Tuple[float, float, float]:
    """(<sigma_x>, <sigma_y>, <sigma_z>)"""
    return (
        expectation(rho, PauliAxis.X),
        expectation(rho, PauliAxis.Y),
        expectation(rho, PauliAxis.Z),
    )


def analytic_trace(
    mask: PhaseMask,
    profile: IntensityProfile,
    p: DephasingLike,
    levels: Optional[int] = None,
    counts: Optional[CountsGrid] = None,
    threads: Optional[int] = None,
) -> TraceEstimate:
    """
    Dephasing- and intensity-weighted prediction of <sigma_x> + i<sigma_y>

    Args:
        mask: Encoded phase map
        profile: Beam weights c_ij
        p: Dephasing parameter
        levels: When given, attach systematic errors for a 2*pi/levels phase step
        counts: Raw counts grid for the Poisson part of the systematics
        threads: Worker count for the pixel reductions

    Raises:
        DimsMismatch: if the panels differ
    """
    dephasing = as_dephasing(p)
    cos_sum, sin_sum = weighted_phase_sums(mask, profile, threads=threads)
    factor = dephasing.coherence_factor
    estimate = TraceEstimate(re=factor * cos_sum, im=factor * sin_sum)

    if levels is not None:
        from .systematics import propagate_systematics

        sys_re, sys_im = propagate_systematics(mask, profile, dephasing, levels, counts=counts, threads=threads)
        estimate = estimate.with_systematics(sys_re, sys_im)

    logger.debug(f"Analytic trace for {mask.dims}, p={dephasing.p}: ({estimate.re:.6f}, {estimate.im:.6f})")
    return estimate


def exact_normalized_trace(mask: PhaseMask, threads: Optional[int] = None) -> complex:
    """
    Flat-beam, dephasing-free reference sum exp(i phi) / (N_x N_y)

    The conjugate of Tr(U)/(N_x N_y) for U = diag(exp(-i phi)).
    """
    count = mask.pixel_count
    cos_sum = compensated_sum(np.cos(mask.phases), threads=threads)
    sin_sum = compensated_sum(np.sin(mask.phases), threads=threads)
    return complex(cos_sum / count, sin_sum / count)
