"""
Beam Intensity Profiles

Constructors for the transverse intensity weights c_ij on the panel: flat,
Gaussian, and ingestion of coincidence counts measured on square detection
cells. Every constructor returns weights normalized to unit sum.
"""

import logging
from typing import Optional

import numpy as np

from ..data_models.domain_models_core import CountsGrid, IntensityProfile, PanelDims
from ..dqc1_core.summation import compensated_sum
from ..exceptions import AllZeroCounts, BadWaist, TilingMismatch, ValidationError

logger = logging.getLogger(__name__)


def normalize_weights(weights: np.ndarray) -> np.ndarray:
    """
    Scale nonnegative weights to unit (compensated) sum

    Raises:
        AllZeroCounts: if every weight is zero
    """
    total = compensated_sum(weights)
    if total <= 0.0:
        raise AllZeroCounts("weights sum to zero, nothing to normalize")
    return np.asarray(weights, dtype=np.float64) / total


def flat(dims: PanelDims) -> IntensityProfile:
    """Uniform beam: every weight 1 / (N_x N_y)"""
    weights = np.full(dims.shape, 1.0 / dims.pixel_count)
    return IntensityProfile(dims=dims, weights=weights)


def _gaussian_axis(count: int, center: float, waist: float) -> np.ndarray:
    """exp(-2 d^2 / w^2) at pixel (or cell) centers along one axis"""
    offsets = (np.arange(count) + 0.5) - center
    return np.exp(-2.0 * np.square(offsets) / (waist * waist))


def gaussian(
    dims: PanelDims,
    waist: float,
    center_x: Optional[float] = None,
    center_y: Optional[float] = None,
) -> IntensityProfile:
    """
    TEM00-like beam, weights proportional to exp(-2 r^2 / waist^2)

    Args:
        dims: Panel dimensions
        waist: 1/e^2 intensity radius in pixels
        center_x: Beam center in pixel coordinates (default: panel center)
        center_y: Beam center in pixel coordinates (default: panel center)

    Raises:
        BadWaist: if waist <= 0 or the beam misses every pixel center
    """
    if not waist > 0:
        raise BadWaist(f"waist must be positive, got {waist}")

    cx = dims.width / 2.0 if center_x is None else float(center_x)
    cy = dims.height / 2.0 if center_y is None else float(center_y)
    weights = np.outer(_gaussian_axis(dims.height, cy, waist), _gaussian_axis(dims.width, cx, waist))

    try:
        weights = normalize_weights(weights)
    except AllZeroCounts as e:
        raise BadWaist(f"waist {waist} px leaves every pixel at zero intensity") from e

    logger.info(f"Built Gaussian profile on {dims}, waist {waist} px, center ({cx}, {cy})")
    return IntensityProfile(dims=dims, weights=weights)


def from_counts(grid: CountsGrid, dims: PanelDims) -> IntensityProfile:
    """
    Pixel weights from a coincidence-count grid

    Each pixel of cell (I, J) gets C_IJ / (N * cell_size^2) with N = sum C_IJ,
    i.e. the intensity is taken as flat inside a cell.

    Raises:
        TilingMismatch: if the cells do not cover the panel exactly
        AllZeroCounts: if no cell has counts
    """
    if grid.covered_dims != dims:
        raise TilingMismatch(
            f"{grid.cells_x}x{grid.cells_y} cells of {grid.cell_size} px cover {grid.covered_dims}, panel is {dims}"
        )
    if not grid.has_signal:
        raise AllZeroCounts("counts grid has no positive cell")

    fractions = normalize_weights(grid.counts)
    per_pixel = fractions / (grid.cell_size * grid.cell_size)
    weights = np.repeat(np.repeat(per_pixel, grid.cell_size, axis=0), grid.cell_size, axis=1)

    logger.info(f"Ingested {grid.cells_x}x{grid.cells_y} counts grid onto {dims}")
    return IntensityProfile(dims=dims, weights=weights)


def make_gaussian_counts(
    cells_x: int, cells_y: int, cell_size: int, total: float, waist_cells: float
) -> CountsGrid:
    """
    Synthetic coincidence grid with a Gaussian envelope

    Stands in for a measured beam scan when none is available.

    Args:
        cells_x: Cells per row
        cells_y: Cells per column
        cell_size: Cell edge in pixels
        total: Sum of all counts
        waist_cells: 1/e^2 radius in cell units

    Raises:
        BadWaist: if waist_cells <= 0
    """
    if not waist_cells > 0:
        raise BadWaist(f"waist must be positive, got {waist_cells}")
    if not total > 0:
        raise ValidationError(f"total counts must be positive, got {total}")

    envelope = np.outer(
        _gaussian_axis(cells_y, cells_y / 2.0, waist_cells),
        _gaussian_axis(cells_x, cells_x / 2.0, waist_cells),
    )
    counts = float(total) * normalize_weights(envelope)
    return CountsGrid(cells_x=cells_x, cells_y=cells_y, cell_size=cell_size, counts=counts)


def cell_masses(profile: IntensityProfile, cell_size: int) -> np.ndarray:
    """
    Per-cell weight sums, shape (cells_y, cells_x)

    Raises:
        TilingMismatch: if cell_size does not divide both panel edges
    """
    dims = profile.dims
    if cell_size < 1 or dims.width % cell_size or dims.height % cell_size:
        raise TilingMismatch(f"cells of {cell_size} px do not tile {dims}")
    blocks = profile.weights.reshape(dims.height // cell_size, cell_size, dims.width // cell_size, cell_size)
    return blocks.sum(axis=(1, 3))
