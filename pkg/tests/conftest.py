"""
Pytest configuration and fixtures for DQC1 SLM tests
"""

import math

import numpy as np
import pytest
from click.testing import CliRunner

from dqc1slm.beam_profile import flat, gaussian
from dqc1slm.config.local_config import ENV_CONFIG_PATH, ENV_THREADS
from dqc1slm.config.simulation_config_manager import set_simulation_config_manager
from dqc1slm.data_models.domain_models_core import CountsGrid, IntensityProfile, PanelDims, PhaseMask
from dqc1slm.data_models.factories import PanelFactory
from dqc1slm.phase_mask import make_linear_ramp


@pytest.fixture
def tiny_dims():
    """4 x 4 panel"""
    return PanelDims(width=4, height=4)


@pytest.fixture
def small_dims():
    """96 x 96 panel, fast enough for exhaustive checks"""
    return PanelDims(width=96, height=96)


@pytest.fixture
def full_hd_dims():
    """The 1920 x 1080 modulator"""
    return PanelFactory.create_full_hd_panel()


@pytest.fixture
def flat_small(small_dims):
    return flat(small_dims)


@pytest.fixture
def gaussian_small(small_dims):
    return gaussian(small_dims, waist=30.0)


@pytest.fixture
def quarter_ramp_small(small_dims):
    """Ramp spanning (pi/2, pi) on the small panel"""
    return make_linear_ramp(small_dims, math.pi / 2, math.pi)


@pytest.fixture
def uniform_counts_full_hd():
    """16 x 9 cells of 120 px with 10^5 counts in total"""
    return CountsGrid(cells_x=16, cells_y=9, cell_size=120, counts=np.full((9, 16), 1e5 / 144))


@pytest.fixture
def rng():
    """Seeded generator for randomized test inputs"""
    return np.random.default_rng(20240501)


@pytest.fixture
def random_mask(rng):
    """Builder of uniformly random phase masks"""

    def build(dims):
        return PhaseMask(dims=dims, phases=rng.uniform(0.0, 2 * math.pi, size=dims.shape))

    return build


@pytest.fixture
def random_profile(rng):
    """Builder of random normalized profiles"""

    def build(dims):
        weights = rng.random(dims.shape)
        return IntensityProfile(dims=dims, weights=weights / weights.sum())

    return build


@pytest.fixture
def config_file(tmp_path):
    """Builder writing a simulation YAML into tmp_path"""

    def write(text: str = ""):
        path = tmp_path / "simulation_config.yaml"
        path.write_text(text, encoding="utf-8")
        return path

    return write


@pytest.fixture
def cli_runner():
    """Create a Click CLI test runner"""
    return CliRunner()


def pytest_configure(config):
    """Configure custom pytest markers"""
    config.addinivalue_line("markers", "unit: Unit tests that don't require external dependencies")
    config.addinivalue_line("markers", "integration: End-to-end runs through the CLI")
    config.addinivalue_line("markers", "slow: Full-panel acceptance runs")


# Environment setup for tests
@pytest.fixture(autouse=True)
def isolated_configuration(monkeypatch):
    """Default configuration, no thread or config overrides from the environment"""
    monkeypatch.delenv(ENV_THREADS, raising=False)
    monkeypatch.delenv(ENV_CONFIG_PATH, raising=False)
    set_simulation_config_manager(None)
    yield
    set_simulation_config_manager(None)
