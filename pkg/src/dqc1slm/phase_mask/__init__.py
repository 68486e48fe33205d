"""
Phase Mask Package

Constructs, quantizes, loads and saves the phase masks that encode diagonal
unitaries on the virtual SLM panel.
"""

from .mask_io import load_mask, save_mask
from .masks import (
    balanced_cell_labels,
    circular_distance,
    expand_cells,
    levels_to_phases,
    make_constant,
    make_half_split,
    make_linear_ramp,
    make_random_balanced,
    phase_census,
    quantize,
    register_qubits,
)

__all__ = [
    "make_constant",
    "make_half_split",
    "make_random_balanced",
    "make_linear_ramp",
    "quantize",
    "save_mask",
    "load_mask",
    "phase_census",
    "register_qubits",
    "circular_distance",
    "levels_to_phases",
    "balanced_cell_labels",
    "expand_cells",
]
