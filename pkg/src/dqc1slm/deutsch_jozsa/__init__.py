"""Deutsch-Jozsa oracle test and cell-size sweep"""

from .oracle import check_boolean, default_threshold, make_oracle, run_dj
from .sweep import SUMMARY_COLUMNS, SWEEP_COLUMNS, resolution_sweep, summarize_sweep

__all__ = [
    "SUMMARY_COLUMNS",
    "SWEEP_COLUMNS",
    "check_boolean",
    "default_threshold",
    "make_oracle",
    "resolution_sweep",
    "run_dj",
    "summarize_sweep",
]
