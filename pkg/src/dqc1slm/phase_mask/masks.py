"""
Phase Mask Construction

Builds the phase maps that encode diagonal unitaries on the virtual SLM:
constant and half-split (Deutsch) oracles, random balanced oracles on
square cells, linear ramps along y, and phase quantization to the
modulator's gray levels.
"""

import logging
import math
from typing import Optional, Tuple

import numpy as np

from ..data_models.domain_models_core import TWO_PI, CellSpec, PanelDims, PhaseMask
from ..exceptions import BadLevels, OddCellCount, OddHeight, ValidationError

logger = logging.getLogger(__name__)


def levels_to_phases(indices: np.ndarray, levels: int) -> np.ndarray:
    """Phase of gray level k out of `levels`: 2*pi*k/levels"""
    return (np.asarray(indices, dtype=np.float64) * TWO_PI) / levels


def make_constant(dims: PanelDims, phase: float) -> PhaseMask:
    """Every pixel carries `phase` (reduced mod 2*pi)"""
    return PhaseMask(dims=dims, phases=np.full(dims.shape, float(phase)))


def make_half_split(dims: PanelDims, phase_upper: float, phase_lower: float) -> PhaseMask:
    """
    Two-region (Deutsch, d = 2) oracle

    Rows 0 .. N_y/2 - 1 (upper half of the panel) carry phase_upper, the rest
    phase_lower.

    Raises:
        OddHeight: if the panel has an odd number of rows
    """
    if dims.height % 2:
        raise OddHeight(f"half-split mask needs an even height, got {dims.height}")

    phases = np.empty(dims.shape)
    half = dims.height // 2
    phases[:half, :] = phase_upper
    phases[half:, :] = phase_lower
    return PhaseMask(dims=dims, phases=phases)


def balanced_cell_labels(cell_count: int, seed: int) -> np.ndarray:
    """
    Shuffled cell labels, exactly half True (phase pi)

    Cells are ranked by raw 64-bit draws of a PCG64 bit generator and the upper
    half of the ranking gets pi. Only the bit generator's output stream is
    used, which numpy keeps fixed across releases, so the labels depend only on
    (cell_count, seed).
    """
    if seed < 0:
        raise ValidationError(f"seed must be nonnegative, got {seed}")
    if cell_count % 2:
        raise OddCellCount(f"cannot balance an odd number of cells ({cell_count})")

    keys = np.random.PCG64(seed).random_raw(cell_count)
    order = np.argsort(keys, kind="stable")
    labels = np.zeros(cell_count, dtype=bool)
    labels[order[cell_count // 2 :]] = True
    return labels


def expand_cells(cell_values: np.ndarray, dims: PanelDims, cells: CellSpec) -> np.ndarray:
    """Broadcast a (cells_y, cells_x) grid to pixels; trailing cells may be partial"""
    row_index = np.arange(dims.height) // cells.cell_height
    col_index = np.arange(dims.width) // cells.cell_width
    return cell_values[np.ix_(row_index, col_index)]


def make_random_balanced(dims: PanelDims, cells: CellSpec, seed: int) -> PhaseMask:
    """
    Balanced oracle: half the cells at 0, half at pi, randomly placed

    Raises:
        OddCellCount: if the number of cells (partial cells included) is odd
    """
    grid_shape = cells.grid_shape(dims)
    labels = balanced_cell_labels(grid_shape[0] * grid_shape[1], seed).reshape(grid_shape)

    if not cells.tiles_exactly(dims):
        logger.warning(
            f"{cells} cells do not tile {dims}; partial cells make pixel balance approximate"
        )

    phases = np.where(expand_cells(labels, dims, cells), math.pi, 0.0)
    return PhaseMask(dims=dims, phases=phases)


def make_linear_ramp(
    dims: PanelDims, phi_start: float, phi_end: float, literal: bool = False
) -> PhaseMask:
    """
    Phases varying linearly along y, constant along x

    Row j (0 .. N_y - 1) gets phi_start + (j / N_y) * (phi_end - phi_start), so the
    ramp spans [phi_start, phi_end). With literal=True the increment is
    (j / N_y) * phi_end instead.
    """
    fraction = np.arange(dims.height, dtype=np.float64) / dims.height
    increment = phi_end if literal else phi_end - phi_start
    column = phi_start + fraction * increment
    phases = np.broadcast_to(column[:, np.newaxis], dims.shape)
    return PhaseMask(dims=dims, phases=phases)


def level_indices(phases: np.ndarray, levels: int) -> np.ndarray:
    """Nearest gray level of each phase, ties rounding up, level `levels` wrapping to 0"""
    step = TWO_PI / levels
    return (np.floor(np.asarray(phases) / step + 0.5) % levels).astype(np.int64)


def quantize(mask: PhaseMask, levels: int) -> PhaseMask:
    """
    Snap every phase to the nearest multiple of 2*pi/levels

    Ties round up; level `levels` wraps to 0. Idempotent.

    Raises:
        BadLevels: if levels < 2
    """
    if int(levels) < 2:
        raise BadLevels(f"need at least 2 phase levels, got {levels}")
    levels = int(levels)

    indices = level_indices(mask.phases, levels)
    return PhaseMask(dims=mask.dims, phases=levels_to_phases(indices, levels), levels=levels)


def phase_levels_of(mask: PhaseMask) -> Optional[np.ndarray]:
    """Integer gray levels of a quantized mask, None if not quantized"""
    if mask.levels is None:
        return None
    return level_indices(mask.phases, mask.levels)


def circular_distance(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Distance between phases measured on the circle, in [0, pi]"""
    diff = np.mod(np.asarray(a) - np.asarray(b), TWO_PI)
    return np.minimum(diff, TWO_PI - diff)


def phase_census(mask: PhaseMask, tolerance: float = 1e-6) -> Tuple[int, int, int]:
    """
    Count pixels at phase 0, at phase pi, and anything else

    Returns:
        (n_zero, n_pi, n_other)
    """
    phases = mask.phases
    near_zero = circular_distance(phases, 0.0) <= tolerance
    near_pi = circular_distance(phases, math.pi) <= tolerance
    n_zero = int(np.count_nonzero(near_zero))
    n_pi = int(np.count_nonzero(near_pi))
    return n_zero, n_pi, mask.pixel_count - n_zero - n_pi


def register_qubits(dims: PanelDims, cells: Optional[CellSpec] = None) -> float:
    """Equivalent register size log2(number of addressable cells)"""
    count = cells.cell_count(dims) if cells else dims.pixel_count
    return math.log2(count)
