"""
PMASK1 mask files

Line 1: `PMASK1 <width> <height>`, optionally followed by `L<levels>`; then
`height` lines of `width` values. Without `L<levels>` values are radians,
with it they are integer gray levels k meaning phase 2*pi*k/levels.
"""

import logging
from pathlib import Path
from typing import Union

import numpy as np

from ..data_models.domain_models_core import PanelDims, PhaseMask
from ..exceptions import MalformedFile
from ..storage.text_grid import parse_int_field, read_text_grid, write_text_grid
from .masks import levels_to_phases, phase_levels_of

logger = logging.getLogger(__name__)

MASK_MAGIC = "PMASK1"


def save_mask(mask: PhaseMask, path: Union[str, Path]) -> Path:
    """Write a mask; quantized masks are stored as integer gray levels"""
    header = [MASK_MAGIC, mask.dims.width, mask.dims.height]
    levels = phase_levels_of(mask)
    if levels is not None:
        header.append(f"L{mask.levels}")
        written = write_text_grid(path, header, levels, fmt="%d")
    else:
        written = write_text_grid(path, header, mask.phases, fmt="%.17g")

    logger.info(f"Saved {mask.dims} mask to {written}")
    return written


def load_mask(path: Union[str, Path]) -> PhaseMask:
    """
    Read a mask file

    Raises:
        OSError: if the file cannot be read
        MalformedFile: on a bad header or a payload that does not match it
    """
    grid = read_text_grid(path, MASK_MAGIC)
    if len(grid.header) not in (2, 3):
        raise MalformedFile(f"{grid.path}: expected 'PMASK1 <width> <height> [L<levels>]'")

    width = parse_int_field(grid.path, grid.header[0], "width")
    height = parse_int_field(grid.path, grid.header[1], "height")
    dims = PanelDims(width=width, height=height)

    if len(grid.header) == 3:
        token = grid.header[2]
        if not token.startswith("L"):
            raise MalformedFile(f"{grid.path}: level field must look like L256, got {token!r}")
        levels = parse_int_field(grid.path, token[1:], "levels")
        if levels < 2:
            raise MalformedFile(f"{grid.path}: need at least 2 levels, got {levels}")
        indices = grid.as_array(height, width, dtype=np.int64)
        mask = PhaseMask(dims=dims, phases=levels_to_phases(indices % levels, levels), levels=levels)
    else:
        mask = PhaseMask(dims=dims, phases=grid.as_array(height, width))

    logger.info(f"Loaded {dims} mask from {grid.path}")
    return mask
