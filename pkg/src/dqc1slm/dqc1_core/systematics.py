"""
Systematic uncertainty of the analytic trace

Two independent sources, combined in quadrature per component:
  - phase resolution: each gray level may be off by one modulation step
    2*pi/levels, shared by every pixel displaying that level
  - beam calibration: each coincidence count C_IJ is Poissonian, dC = sqrt(C),
    propagated through the normalization N = sum C_IJ
"""

import logging
import math
from typing import Optional, Tuple

import numpy as np

from ..data_models.domain_models_core import CountsGrid, IntensityProfile, PhaseMask
from ..exceptions import AllZeroCounts, BadLevels, TilingMismatch
from ..phase_mask.masks import level_indices
from .analytic import DephasingLike, as_dephasing, check_dims
from .summation import compensated_sum

logger = logging.getLogger(__name__)


def phase_step_terms(
    mask: PhaseMask,
    profile: IntensityProfile,
    factor: float,
    levels: int,
    per_level: bool = True,
    threads: Optional[int] = None,
) -> Tuple[float, float]:
    """
    Squared phase-resolution contributions (re, im)

    d<sx>/dphi = -f c sin(phi) and d<sy>/dphi = f c cos(phi) per pixel. With
    per_level the pixels are grouped by their nearest gray level and each
    group's derivatives add before squaring; otherwise every pixel is an
    independent term.
    """
    step = 2.0 * math.pi / levels
    scaled = factor * step * profile.weights
    d_re = scaled * np.sin(mask.phases)
    d_im = scaled * np.cos(mask.phases)

    if per_level:
        groups = level_indices(mask.phases, levels).ravel()
        d_re = np.bincount(groups, weights=d_re.ravel(), minlength=levels)
        d_im = np.bincount(groups, weights=d_im.ravel(), minlength=levels)

    re_sq = compensated_sum(np.square(d_re), threads=threads)
    im_sq = compensated_sum(np.square(d_im), threads=threads)
    return re_sq, im_sq


def cell_phase_means(mask: PhaseMask, counts: CountsGrid) -> Tuple[np.ndarray, np.ndarray]:
    """Mean cos(phi) and sin(phi) over every detection cell, shape (cells_y, cells_x)"""
    if counts.covered_dims != mask.dims:
        raise TilingMismatch(
            f"counts grid covers {counts.covered_dims}, mask panel is {mask.dims}"
        )
    size = counts.cell_size
    blocks = mask.phases.reshape(counts.cells_y, size, counts.cells_x, size)
    return np.cos(blocks).mean(axis=(1, 3)), np.sin(blocks).mean(axis=(1, 3))


def poisson_terms(mask: PhaseMask, counts: CountsGrid, factor: float) -> Tuple[float, float]:
    """
    Squared counting-noise contributions (re, im)

    <sx> = f * sum_IJ C_IJ m_IJ / N with m_IJ the cell mean of cos(phi) (sin for
    <sy>) and N = sum C_IJ, so d<sx>/dC_IJ = f * (m_IJ - m_bar) / N where m_bar is
    the count-weighted mean of m. With dC_IJ = sqrt(C_IJ) the term is
    f^2 / N^2 * sum (m_IJ - m_bar)^2 C_IJ, zero for a constant mask.
    """
    mean_cos, mean_sin = cell_phase_means(mask, counts)
    total = compensated_sum(counts.counts)
    if total <= 0.0:
        raise AllZeroCounts("counts grid has no signal")

    scale = (factor / total) ** 2
    terms = []
    for means in (mean_cos, mean_sin):
        centre = compensated_sum(means * counts.counts) / total
        terms.append(scale * compensated_sum(np.square(means - centre) * counts.counts))
    return terms[0], terms[1]


def propagate_systematics(
    mask: PhaseMask,
    profile: IntensityProfile,
    p: DephasingLike,
    levels: int,
    counts: Optional[CountsGrid] = None,
    threads: Optional[int] = None,
    per_level: bool = True,
) -> Tuple[float, float]:
    """
    Systematic errors (sys_err_re, sys_err_im) of the analytic trace

    Args:
        mask: Encoded phase map
        profile: Beam weights
        p: Dephasing parameter
        levels: Phase levels of the modulator (step 2*pi/levels)
        counts: Raw coincidence counts behind the profile; without it the
            Poisson term is 0
        threads: Worker count for the pixel reductions
        per_level: Share the phase-step error among pixels of the same gray
            level (False: independent per pixel)

    Raises:
        BadLevels: if levels < 2
        DimsMismatch: if mask and profile panels differ
        TilingMismatch: if counts do not cover the mask panel
    """
    if int(levels) < 2:
        raise BadLevels(f"levels must be >= 2, got {levels}")
    check_dims(mask, profile)
    factor = as_dephasing(p).coherence_factor

    phase_re, phase_im = phase_step_terms(
        mask, profile, factor, int(levels), per_level=per_level, threads=threads
    )

    if counts is None:
        logger.warning("No counts grid supplied; Poisson term of the systematic error set to 0")
        poisson_re = poisson_im = 0.0
    else:
        poisson_re, poisson_im = poisson_terms(mask, counts, factor)

    sys_re = math.sqrt(phase_re + poisson_re)
    sys_im = math.sqrt(phase_im + poisson_im)
    logger.debug(
        f"Systematics (levels={levels}): phase=({math.sqrt(phase_re):.2e}, {math.sqrt(phase_im):.2e}) "
        f"poisson=({math.sqrt(poisson_re):.2e}, {math.sqrt(poisson_im):.2e})"
    )
    return sys_re, sys_im
