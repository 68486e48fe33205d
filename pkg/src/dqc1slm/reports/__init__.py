"""JSON run reports and their schema"""

from .run_report import (
    ComplexValue,
    EstimateInfo,
    InputDigest,
    MeasurementInfo,
    NoiseInfo,
    PanelInfo,
    RunReport,
    TimingInfo,
    VerdictInfo,
    digest_inputs,
    echo_parameters,
    file_digest,
    finish_timing,
    load_report,
    report_schema,
    start_timing,
    write_report,
    write_report_schema,
)

__all__ = [
    "ComplexValue",
    "EstimateInfo",
    "InputDigest",
    "MeasurementInfo",
    "NoiseInfo",
    "PanelInfo",
    "RunReport",
    "TimingInfo",
    "VerdictInfo",
    "digest_inputs",
    "echo_parameters",
    "file_digest",
    "finish_timing",
    "load_report",
    "report_schema",
    "start_timing",
    "write_report",
    "write_report_schema",
]
