"""
Simulation Configuration Manager

Loads simulation defaults from YAML and resolves environment overrides
(thread count) so library code and the CLI share one source of defaults.
"""

import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

from ..exceptions import ConfigurationError
from .local_config import DEFAULT_CONFIG_PATH, ENV_CONFIG_PATH, ENV_FILE_PATH, ENV_THREADS

logger = logging.getLogger(__name__)

# Load environment variables from .env file
try:
    from dotenv import load_dotenv

    if ENV_FILE_PATH.exists():
        load_dotenv(ENV_FILE_PATH)
        logger.info(f"Loaded .env from {ENV_FILE_PATH}")
except ImportError:
    logger.warning("python-dotenv not installed, environment variables from .env will not be loaded")


SAMPLING_MODES = ("binomial", "per_photon")


@dataclass
class PanelDefaults:
    """Default virtual panel"""

    width: int = 1920
    height: int = 1080
    beam_cell_size: int = 80


@dataclass
class NoiseDefaults:
    """Default noise model"""

    dephasing_p: float = 0.08
    phase_levels: int = 256
    profile_sum_tolerance: float = 1e-6


@dataclass
class MeasurementDefaults:
    """Default photon-counting parameters"""

    photons_per_basis: int = 100_000
    seed: int = 0
    mode: str = "binomial"
    shard_photons: int = 1 << 20


@dataclass
class OracleDefaults:
    """Default Deutsch-Jozsa parameters"""

    boolean_tolerance: float = 1e-6
    threshold: Optional[float] = None
    sweep_cell_sizes: List[int] = field(default_factory=lambda: [1, 5, 10])
    sweep_trials: int = 100

    def threshold_for(self, p: float) -> float:
        """Decision threshold for dephasing p (explicit value wins)"""
        if self.threshold is not None:
            return self.threshold
        return (1.0 - 2.0 * p) / 2.0


@dataclass
class ReductionDefaults:
    """Pixel reduction settings"""

    chunk_size: int = 65536
    threads: int = 1


@dataclass
class SimulationConfig:
    """Complete simulation configuration"""

    panel: PanelDefaults
    noise: NoiseDefaults
    measurement: MeasurementDefaults
    oracle: OracleDefaults
    reduction: ReductionDefaults


class SimulationConfigManager:
    """
    Manages simulation defaults

    Features:
    - Load configuration from YAML file
    - Validate values at load time
    - Resolve worker count from flag, environment and file
    """

    def __init__(self, config_path: Optional[Path] = None):
        """
        Initialize configuration manager

        Args:
            config_path: Path to configuration YAML file
        """
        if config_path is None:
            env_path = os.getenv(ENV_CONFIG_PATH)
            config_path = Path(env_path) if env_path else DEFAULT_CONFIG_PATH

        self.config_path = Path(config_path)
        self.config: Optional[SimulationConfig] = None
        self._load_config()

    def _load_config(self) -> None:
        """Load configuration from YAML file"""
        if not self.config_path.exists():
            logger.error(f"Configuration file not found: {self.config_path}")
            raise FileNotFoundError(f"Configuration file not found: {self.config_path}")

        with open(self.config_path, "r", encoding="utf-8") as file:
            yaml_data: Dict[str, Any] = yaml.safe_load(file) or {}

        panel_data = yaml_data.get("panel", {})
        noise_data = yaml_data.get("noise", {})
        measurement_data = yaml_data.get("measurement", {})
        oracle_data = yaml_data.get("oracle", {})
        reduction_data = yaml_data.get("reduction", {})

        config = SimulationConfig(
            panel=PanelDefaults(
                width=int(panel_data.get("width", 1920)),
                height=int(panel_data.get("height", 1080)),
                beam_cell_size=int(panel_data.get("beam_cell_size", 80)),
            ),
            noise=NoiseDefaults(
                dephasing_p=float(noise_data.get("dephasing_p", 0.08)),
                phase_levels=int(noise_data.get("phase_levels", 256)),
                profile_sum_tolerance=float(noise_data.get("profile_sum_tolerance", 1e-6)),
            ),
            measurement=MeasurementDefaults(
                photons_per_basis=int(measurement_data.get("photons_per_basis", 100_000)),
                seed=int(measurement_data.get("seed", 0)),
                mode=str(measurement_data.get("mode", "binomial")),
                shard_photons=int(measurement_data.get("shard_photons", 1 << 20)),
            ),
            oracle=OracleDefaults(
                boolean_tolerance=float(oracle_data.get("boolean_tolerance", 1e-6)),
                threshold=oracle_data.get("threshold"),
                sweep_cell_sizes=[int(c) for c in oracle_data.get("sweep_cell_sizes", [1, 5, 10])],
                sweep_trials=int(oracle_data.get("sweep_trials", 100)),
            ),
            reduction=ReductionDefaults(
                chunk_size=int(reduction_data.get("chunk_size", 65536)),
                threads=int(reduction_data.get("threads", 1)),
            ),
        )
        self._validate(config)
        self.config = config

        logger.info(f"Loaded simulation configuration from {self.config_path}")

    @staticmethod
    def _validate(config: SimulationConfig) -> None:
        """Reject inconsistent defaults"""
        if config.panel.width < 1 or config.panel.height < 1:
            raise ConfigurationError("panel dimensions must be positive")
        if config.panel.beam_cell_size < 1:
            raise ConfigurationError("beam_cell_size must be positive")
        if not 0.0 <= config.noise.dephasing_p <= 0.5:
            raise ConfigurationError(f"dephasing_p must lie in [0, 1/2], got {config.noise.dephasing_p}")
        if config.noise.phase_levels < 2:
            raise ConfigurationError("phase_levels must be at least 2")
        if config.measurement.mode not in SAMPLING_MODES:
            raise ConfigurationError(f"unknown sampling mode: {config.measurement.mode}")
        if config.measurement.photons_per_basis < 1 or config.measurement.shard_photons < 1:
            raise ConfigurationError("photon budgets must be positive")
        threshold = config.oracle.threshold
        if threshold is not None and not 0.0 < float(threshold) < 1.0:
            raise ConfigurationError("oracle threshold must lie in (0, 1)")
        if config.reduction.chunk_size < 2 or config.reduction.threads < 1:
            raise ConfigurationError("reduction chunk_size >= 2 and threads >= 1 required")

    def resolve_thread_count(self, explicit: Optional[int] = None) -> int:
        """
        Worker count: explicit flag, then environment, then YAML

        Args:
            explicit: Value given on the command line, if any

        Returns:
            Positive worker count
        """
        if explicit is not None:
            return max(1, int(explicit))

        env_value = os.getenv(ENV_THREADS)
        if env_value:
            try:
                return max(1, int(env_value))
            except ValueError:
                logger.warning(f"Ignoring non-integer {ENV_THREADS}={env_value!r}")

        return self.config.reduction.threads

    def reload_config(self) -> None:
        """Reload configuration from file"""
        logger.info("Reloading simulation configuration...")
        self._load_config()


# Global instance for easy access
_simulation_config_manager: Optional[SimulationConfigManager] = None


def get_simulation_config_manager() -> SimulationConfigManager:
    """
    Get the global simulation configuration manager

    Returns:
        SimulationConfigManager instance
    """
    global _simulation_config_manager
    if _simulation_config_manager is None:
        _simulation_config_manager = SimulationConfigManager()
    return _simulation_config_manager


def set_simulation_config_manager(manager: Optional[SimulationConfigManager]) -> None:
    """Replace the global manager (CLI --config, tests); None resets to defaults"""
    global _simulation_config_manager
    _simulation_config_manager = manager


def get_simulation_config() -> SimulationConfig:
    """Shortcut for the active SimulationConfig"""
    return get_simulation_config_manager().config


def resolve_thread_count(explicit: Optional[int] = None) -> int:
    """Worker count per the global manager's precedence rules"""
    return get_simulation_config_manager().resolve_thread_count(explicit)
