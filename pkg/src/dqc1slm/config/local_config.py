"""
DQC1 SLM Local Configuration
Paths, logging and environment variable names
"""

from pathlib import Path

# Base Paths
PROJECT_ROOT = Path(__file__).parent.parent.parent.parent  # Go up to actual project root
DEFAULT_CONFIG_PATH = Path(__file__).parent / "simulation_config.yaml"
ENV_FILE_PATH = PROJECT_ROOT / ".env"

# Environment variables
ENV_THREADS = "DQC1SLM_THREADS"
ENV_CONFIG_PATH = "DQC1SLM_CONFIG"

# Logging Configuration
LOGGING_CONFIG = {
    "level": "INFO",
    "verbose_level": "DEBUG",
    "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
}

# Report Configuration
REPORT_CONFIG = {
    "schema_version": "1",
    "json_indent": 2,
    "digest_algorithm": "sha256",
}
