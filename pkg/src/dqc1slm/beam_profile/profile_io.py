"""
Profile and counts artefacts

    IPROF1 <width> <height>                 then <height> rows of <width> weights
    CGRID1 <cells_x> <cells_y> <cell_size>  then <cells_y> rows of <cells_x> counts
"""

import logging
from pathlib import Path
from typing import Optional

import numpy as np

from ..config.simulation_config_manager import get_simulation_config
from ..data_models.domain_models_core import UNIT_SUM_TOLERANCE, CountsGrid, IntensityProfile, PanelDims
from ..dqc1_core.summation import compensated_sum
from ..exceptions import AllZeroCounts, MalformedFile, NegativeWeight
from ..storage.text_grid import PathLike, parse_int_field, read_text_grid, write_text_grid

logger = logging.getLogger(__name__)

PROFILE_MAGIC = "IPROF1"
COUNTS_MAGIC = "CGRID1"


def save_profile(profile: IntensityProfile, path: PathLike) -> Path:
    """Write an IPROF1 file (weights at full float64 precision)"""
    header = [PROFILE_MAGIC, profile.dims.width, profile.dims.height]
    return write_text_grid(path, header, profile.weights, fmt="%.17g")


def load_profile(path: PathLike, tolerance: Optional[float] = None) -> IntensityProfile:
    """
    Read an IPROF1 file

    Weights are re-normalized to unit sum; a warning is logged when the file's
    sum is off by more than `tolerance` (default from configuration).

    Raises:
        MalformedFile: on a bad header or payload
        NegativeWeight: if any weight is negative
        AllZeroCounts: if every weight is zero
    """
    grid = read_text_grid(path, PROFILE_MAGIC)
    if len(grid.header) != 2:
        raise MalformedFile(f"{grid.path}: {PROFILE_MAGIC} header needs <width> <height>")
    width = parse_int_field(grid.path, grid.header[0], "width")
    height = parse_int_field(grid.path, grid.header[1], "height")
    weights = grid.as_array(height, width)

    if not np.all(np.isfinite(weights)):
        raise MalformedFile(f"{grid.path}: non-finite weight")
    if np.any(weights < 0):
        raise NegativeWeight(f"{grid.path}: negative weight")

    total = compensated_sum(weights)
    if total <= 0.0:
        raise AllZeroCounts(f"{grid.path}: weights sum to zero")

    if tolerance is None:
        tolerance = get_simulation_config().noise.profile_sum_tolerance
    deviation = abs(total - 1.0)
    if deviation > tolerance:
        logger.warning(f"{grid.path}: weights sum to {total!r}, re-normalizing")
    if deviation > UNIT_SUM_TOLERANCE:
        weights = weights / total

    logger.info(f"Loaded {width}x{height} profile from {grid.path}")
    return IntensityProfile(dims=PanelDims(width=width, height=height), weights=weights)


def save_counts(counts: CountsGrid, path: PathLike) -> Path:
    """Write a CGRID1 file"""
    header = [COUNTS_MAGIC, counts.cells_x, counts.cells_y, counts.cell_size]
    return write_text_grid(path, header, counts.counts, fmt="%.17g")


def load_counts(path: PathLike) -> CountsGrid:
    """
    Read a CGRID1 file

    Raises:
        MalformedFile: on a bad header or payload
        NegativeWeight: if any count is negative
    """
    grid = read_text_grid(path, COUNTS_MAGIC)
    if len(grid.header) != 3:
        raise MalformedFile(f"{grid.path}: {COUNTS_MAGIC} header needs <cells_x> <cells_y> <cell_size>")
    cells_x = parse_int_field(grid.path, grid.header[0], "cells_x")
    cells_y = parse_int_field(grid.path, grid.header[1], "cells_y")
    cell_size = parse_int_field(grid.path, grid.header[2], "cell_size")
    values = grid.as_array(cells_y, cells_x)
    if not np.all(np.isfinite(values)):
        raise MalformedFile(f"{grid.path}: non-finite count")

    logger.info(f"Loaded {cells_x}x{cells_y} counts grid ({cell_size} px cells) from {grid.path}")
    return CountsGrid(cells_x=cells_x, cells_y=cells_y, cell_size=cell_size, counts=values)
