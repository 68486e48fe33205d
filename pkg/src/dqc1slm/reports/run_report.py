"""
Run Reports

Self-describing JSON record of a CLI run: command echo, input digests, panel,
noise and measurement parameters, and the exact, analytic and Monte Carlo
results. Wall-clock data lives only in the `timing` block; everything else is
reproducible for a fixed seed. The JSON schema is RunReport.model_json_schema(),
published as docs/run_report.schema.json (`dqc1slm report-schema --out`).
"""

import hashlib
import json
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from ..config.local_config import REPORT_CONFIG
from ..data_models.domain_models_core import PanelDims
from ..data_models.domain_models_measurement import MeasurementConfig, OracleVerdict, TraceEstimate
from ..storage.text_grid import PathLike

logger = logging.getLogger(__name__)


class InputDigest(BaseModel):
    """An input file and its content hash"""

    role: str
    path: str
    algorithm: str = REPORT_CONFIG["digest_algorithm"]
    digest: str


class PanelInfo(BaseModel):
    width: int
    height: int
    register_qubits: float = Field(description="log2 of the addressable cell count")

    @classmethod
    def from_dims(cls, dims: PanelDims, register_qubits: float) -> "PanelInfo":
        return cls(width=dims.width, height=dims.height, register_qubits=register_qubits)


class NoiseInfo(BaseModel):
    dephasing_p: float
    phase_levels: Optional[int] = None
    profile: str = Field(description="flat, or the path of the loaded profile")


class MeasurementInfo(BaseModel):
    photons_per_basis: int
    seed: int
    mode: str

    @classmethod
    def from_config(cls, config: MeasurementConfig) -> "MeasurementInfo":
        return cls(photons_per_basis=config.photons_per_basis, seed=config.seed, mode=config.mode.value)


class ComplexValue(BaseModel):
    re: float
    im: float

    @classmethod
    def from_complex(cls, value: complex) -> "ComplexValue":
        return cls(re=value.real, im=value.imag)


class EstimateInfo(BaseModel):
    """TraceEstimate as reported"""

    re: float
    im: float
    stat_err_re: float = 0.0
    stat_err_im: float = 0.0
    sys_err_re: float = 0.0
    sys_err_im: float = 0.0
    photons_used: int = 0

    @classmethod
    def from_estimate(cls, estimate: TraceEstimate) -> "EstimateInfo":
        return cls(
            re=estimate.re,
            im=estimate.im,
            stat_err_re=estimate.stat_err_re,
            stat_err_im=estimate.stat_err_im,
            sys_err_re=estimate.sys_err_re,
            sys_err_im=estimate.sys_err_im,
            photons_used=estimate.photons_used,
        )


class VerdictInfo(BaseModel):
    verdict: str
    statistic: float
    threshold: float
    photons_used: int = 0
    stderr: float = 0.0

    @classmethod
    def from_verdict(cls, verdict: OracleVerdict) -> "VerdictInfo":
        return cls(
            verdict=verdict.verdict.value,
            statistic=verdict.statistic,
            threshold=verdict.threshold,
            photons_used=verdict.photons_used,
            stderr=verdict.stderr,
        )


class TimingInfo(BaseModel):
    """Non-reproducible fields"""

    started_at: datetime
    duration_seconds: float


class RunReport(BaseModel):
    """Top-level report document"""

    schema_version: str = REPORT_CONFIG["schema_version"]
    command: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    inputs: List[InputDigest] = Field(default_factory=list)
    panel: PanelInfo
    noise: NoiseInfo
    measurement: Optional[MeasurementInfo] = None
    exact_flat_trace: Optional[ComplexValue] = None
    analytic: Optional[EstimateInfo] = None
    monte_carlo: Optional[EstimateInfo] = None
    oracle: Optional[VerdictInfo] = None
    timing: TimingInfo


def file_digest(path: PathLike, algorithm: Optional[str] = None) -> str:
    """Hex digest of a file's bytes"""
    hasher = hashlib.new(algorithm or REPORT_CONFIG["digest_algorithm"])
    with open(path, "rb") as handle:
        for block in iter(lambda: handle.read(1 << 16), b""):
            hasher.update(block)
    return hasher.hexdigest()


def digest_inputs(files: Dict[str, Optional[PathLike]]) -> List[InputDigest]:
    """InputDigest per role for every file that was given"""
    return [
        InputDigest(role=role, path=str(path), digest=file_digest(path))
        for role, path in files.items()
        if path is not None
    ]


def echo_parameters(params: Dict[str, Any]) -> Dict[str, Any]:
    """JSON-safe copy of command parameters"""
    echoed: Dict[str, Any] = {}
    for name, value in params.items():
        if value is None or isinstance(value, (bool, int, float, str)):
            echoed[name] = value
        elif isinstance(value, (list, tuple)):
            echoed[name] = [v if isinstance(v, (bool, int, float, str)) else str(v) for v in value]
        else:
            echoed[name] = str(value)
    return echoed


def start_timing() -> datetime:
    return datetime.now(timezone.utc)


def finish_timing(started_at: datetime) -> TimingInfo:
    elapsed = (datetime.now(timezone.utc) - started_at).total_seconds()
    return TimingInfo(started_at=started_at, duration_seconds=elapsed)


def write_report(report: RunReport, path: PathLike) -> Path:
    """Write the report as JSON"""
    path = Path(path)
    path.write_text(report.model_dump_json(indent=REPORT_CONFIG["json_indent"]) + "\n", encoding="utf-8")
    logger.info(f"Wrote {report.command} report to {path}")
    return path


def load_report(path: PathLike) -> RunReport:
    """Parse and validate a report file"""
    return RunReport.model_validate_json(Path(path).read_text(encoding="utf-8"))


def report_schema() -> Dict[str, Any]:
    """JSON schema of RunReport"""
    return RunReport.model_json_schema()


def write_report_schema(path: PathLike) -> Path:
    path = Path(path)
    path.write_text(
        json.dumps(report_schema(), indent=REPORT_CONFIG["json_indent"], sort_keys=True) + "\n", encoding="utf-8"
    )
    return path
