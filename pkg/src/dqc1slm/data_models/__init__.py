"""
Domain Models Package

- Panel, mask and beam entities (PanelDims, PhaseMask, IntensityProfile, ...)
- Qubit and measurement entities (PolarizationDensityMatrix, TraceEstimate, ...)
- Factory classes for standard panels and reference ramps
"""

from .domain_models_core import (
    TWO_PI,
    CellSpec,
    CountsGrid,
    IntensityProfile,
    PanelDims,
    PhaseMask,
    canonicalize_phases,
)
from .domain_models_measurement import (
    CountRecord,
    DephasingParam,
    MeasurementConfig,
    OracleVerdict,
    PauliAxis,
    PolarizationDensityMatrix,
    SamplingMode,
    TraceEstimate,
    Verdict,
)
from .factories import CellFactory, PanelFactory, RampFactory, RampSpec
