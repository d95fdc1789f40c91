"""Tests for engine configuration loading and validation."""
import pytest
import yaml

from src.core.config import CONFIG_FILE, ConfigManager, EngineConfig, ProximityMaxima, default_engine_config
from src.core.config.validation import validate_engine_config
from src.core.errors import ConfigValidationError

from tests.helpers import ROOT


def test_defaults():
    config = EngineConfig()
    assert config.tau == 0.66
    assert config.p_max == 7
    assert config.delta == (0.25, 0.25, 0.25, 0.25)
    assert config.salt_weight == 1e-10
    assert config.proximity_maxima == ProximityMaxima(hop_max=32, rtt_max=1.0, pdv_max=0.1)
    assert config.hop_limit == 64
    assert default_engine_config() == config


def test_shipped_default_file_matches_builtin_defaults():
    assert ConfigManager().load_config(ROOT / CONFIG_FILE) == EngineConfig()


@pytest.mark.parametrize('tau', [0.5, 1.0, 0.2, 1.5])
def test_tau_bounds_are_exclusive(tau):
    with pytest.raises(ConfigValidationError, match="tau"):
        EngineConfig(tau=tau)


def test_delta_must_sum_to_one():
    with pytest.raises(ConfigValidationError, match="sum to 1"):
        EngineConfig(delta=(0.5, 0.5, 0.5, 0.0))
    with pytest.raises(ConfigValidationError, match="four weights"):
        EngineConfig(delta=(0.5, 0.5))
    assert EngineConfig(delta=[0.1, 0.2, 0.3, 0.4]).delta == (0.1, 0.2, 0.3, 0.4)


@pytest.mark.parametrize('weight', [0.01, 0.5, -1e-12])
def test_salt_weight_stays_below_one_percent(weight):
    with pytest.raises(ConfigValidationError, match="salt_weight"):
        EngineConfig(salt_weight=weight)


def test_unknown_keys_are_rejected():
    with pytest.raises(ConfigValidationError, match="Unknown configuration keys: colour"):
        validate_engine_config({'colour': 'blue'})


def test_numeric_strings_are_coerced():
    normalized = validate_engine_config({'salt_weight': '1e-10', 'p_max': '3'})
    assert normalized['salt_weight'] == 1e-10
    assert normalized['p_max'] == 3


def test_proximity_maxima_need_every_bound():
    with pytest.raises(ConfigValidationError, match="proximity_maxima"):
        validate_engine_config({'proximity_maxima': {'hop_max': 10}})
    with pytest.raises(ConfigValidationError, match="rtt_max"):
        validate_engine_config({'proximity_maxima': {'hop_max': 10, 'rtt_max': 0, 'pdv_max': 1}})


def test_replace_revalidates():
    config = EngineConfig().replace(tau=0.9, rng_seed=42)
    assert config.tau == 0.9
    assert config.rng_seed == 42
    with pytest.raises(ConfigValidationError):
        config.replace(hop_limit=0)


def test_load_partial_yaml(tmp_path):
    path = tmp_path / 'node.yaml'
    path.write_text("tau: 0.8\nsalt_weight: 1e-10\n")
    config = ConfigManager().load_config(path)
    assert config.tau == 0.8
    assert config.p_max == 7


def test_load_rejects_bad_yaml(tmp_path):
    path = tmp_path / 'broken.yaml'
    path.write_text("tau: [0.8\n")
    with pytest.raises(ConfigValidationError, match="Invalid YAML"):
        ConfigManager().load_config(path)


def test_load_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        ConfigManager().load_config(tmp_path / 'absent.yaml')


def test_save_then_load(tmp_path):
    manager = ConfigManager()
    manager.update_config(tau=0.75, guard_fraction=0.2)
    path = tmp_path / 'saved' / 'engine.yaml'
    manager.save_config(path)
    assert yaml.safe_load(path.read_text())['tau'] == 0.75

    other = ConfigManager()
    assert other.load_config(path) == manager.engine_config()
    other.clear_config()
    assert other.get_config()['tau'] == 0.66
