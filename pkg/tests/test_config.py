"""
Tests for the simulation configuration manager
"""

import pytest

from dqc1slm.config.local_config import ENV_CONFIG_PATH, ENV_THREADS
from dqc1slm.config.simulation_config_manager import (
    SimulationConfigManager,
    get_simulation_config,
    get_simulation_config_manager,
    resolve_thread_count,
    set_simulation_config_manager,
)
from dqc1slm.exceptions import ConfigurationError


class TestDefaults:
    """Test the packaged default configuration"""

    def test_default_values(self):
        """Test packaged YAML defaults"""
        config = get_simulation_config()
        assert config.panel.width == 1920
        assert config.panel.height == 1080
        assert config.panel.beam_cell_size == 80
        assert config.noise.dephasing_p == 0.08
        assert config.noise.phase_levels == 256
        assert config.measurement.mode == "binomial"
        assert config.reduction.chunk_size == 65536
        assert config.oracle.sweep_cell_sizes == [1, 5, 10]

    def test_global_manager_is_shared(self):
        """Test the accessor returns one instance"""
        assert get_simulation_config_manager() is get_simulation_config_manager()

    def test_default_threshold(self):
        """Test threshold halfway between balanced and constant"""
        oracle = get_simulation_config().oracle
        assert oracle.threshold is None
        assert oracle.threshold_for(0.08) == pytest.approx(0.42)
        assert oracle.threshold_for(0.0) == pytest.approx(0.5)


class TestCustomFiles:
    """Test alternate YAML files"""

    def test_partial_file_uses_defaults(self, config_file):
        """Test missing sections fall back to defaults"""
        manager = SimulationConfigManager(config_file("noise:\n  dephasing_p: 0.1\n"))
        assert manager.config.noise.dephasing_p == 0.1
        assert manager.config.noise.phase_levels == 256
        assert manager.config.panel.width == 1920

    def test_explicit_threshold(self, config_file):
        """Test a configured threshold wins over (1-2p)/2"""
        manager = SimulationConfigManager(config_file("oracle:\n  threshold: 0.3\n"))
        assert manager.config.oracle.threshold_for(0.08) == 0.3

    def test_reload(self, config_file):
        """Test reload_config picks up edits"""
        path = config_file("measurement:\n  seed: 3\n")
        manager = SimulationConfigManager(path)
        assert manager.config.measurement.seed == 3
        path.write_text("measurement:\n  seed: 9\n", encoding="utf-8")
        manager.reload_config()
        assert manager.config.measurement.seed == 9

    def test_env_config_path(self, config_file, monkeypatch):
        """Test DQC1SLM_CONFIG selects the file"""
        monkeypatch.setenv(ENV_CONFIG_PATH, str(config_file("panel:\n  width: 64\n  height: 32\n")))
        assert get_simulation_config().panel.width == 64

    def test_missing_file(self, tmp_path):
        """Test a missing file raises FileNotFoundError"""
        with pytest.raises(FileNotFoundError):
            SimulationConfigManager(tmp_path / "absent.yaml")

    @pytest.mark.parametrize(
        "text",
        [
            "measurement:\n  mode: quantum\n",
            "noise:\n  dephasing_p: 0.7\n",
            "noise:\n  phase_levels: 1\n",
            "oracle:\n  threshold: 1.5\n",
            "reduction:\n  threads: 0\n",
        ],
    )
    def test_invalid_values(self, config_file, text):
        """Test inconsistent values raise ConfigurationError"""
        with pytest.raises(ConfigurationError):
            SimulationConfigManager(config_file(text))


class TestThreadResolution:
    """Test worker count precedence: flag, environment, file"""

    def test_file_default(self):
        """Test YAML value when nothing else is set"""
        assert resolve_thread_count() == 1

    def test_environment(self, monkeypatch):
        """Test DQC1SLM_THREADS overrides the file"""
        monkeypatch.setenv(ENV_THREADS, "6")
        assert resolve_thread_count() == 6

    def test_flag_wins(self, monkeypatch):
        """Test an explicit value overrides the environment"""
        monkeypatch.setenv(ENV_THREADS, "6")
        assert resolve_thread_count(2) == 2

    def test_bad_environment_ignored(self, monkeypatch):
        """Test a non-integer environment value falls back to the file"""
        monkeypatch.setenv(ENV_THREADS, "many")
        assert resolve_thread_count() == 1

    def test_file_threads(self, config_file):
        """Test threads from an alternate YAML"""
        set_simulation_config_manager(SimulationConfigManager(config_file("reduction:\n  threads: 3\n")))
        assert resolve_thread_count() == 3
