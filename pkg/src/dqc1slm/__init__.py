"""
DQC1 SLM - One-clean-qubit trace estimation on a spatial light modulator

Simulates the polarization qubit of a heralded photon controlling a phase
mask on a virtual SLM panel: normalized traces of diagonal unitaries,
finite-photon measurement and the Deutsch-Jozsa oracle test.
"""

__version__ = "0.1.0"
__description__ = "One-clean-qubit trace estimation on a virtual spatial light modulator"

# Core public API exports
from .data_models.domain_models_core import CellSpec, CountsGrid, IntensityProfile, PanelDims, PhaseMask
from .data_models.domain_models_measurement import (
    DephasingParam,
    MeasurementConfig,
    OracleVerdict,
    PauliAxis,
    PolarizationDensityMatrix,
    SamplingMode,
    TraceEstimate,
    Verdict,
)
from .dqc1_core import analytic_trace, apply_slm, exact_normalized_trace, propagate_systematics
from .exceptions import Dqc1SlmError
from .measurement_sim import monte_carlo_trace

__all__ = [
    "CellSpec",
    "CountsGrid",
    "IntensityProfile",
    "PanelDims",
    "PhaseMask",
    "DephasingParam",
    "MeasurementConfig",
    "OracleVerdict",
    "PauliAxis",
    "PolarizationDensityMatrix",
    "SamplingMode",
    "TraceEstimate",
    "Verdict",
    "analytic_trace",
    "apply_slm",
    "exact_normalized_trace",
    "propagate_systematics",
    "Dqc1SlmError",
    "monte_carlo_trace",
]
