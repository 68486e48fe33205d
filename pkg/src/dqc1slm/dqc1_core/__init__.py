"""Analytic DQC1 engine: compensated reductions, SLM evolution, systematics"""

from .analytic import (
    analytic_trace,
    apply_slm,
    as_dephasing,
    bloch_vector,
    dephase,
    exact_normalized_trace,
    expectation,
    input_state,
    weighted_phase_sums,
)
from .summation import compensated_sum
from .systematics import propagate_systematics

__all__ = [
    "analytic_trace",
    "apply_slm",
    "as_dephasing",
    "bloch_vector",
    "compensated_sum",
    "dephase",
    "exact_normalized_trace",
    "expectation",
    "input_state",
    "propagate_systematics",
    "weighted_phase_sums",
]
