"""Configuration management package."""
from .engine import EngineConfig, ProximityMaxima, default_engine_config
from .manager import ConfigManager

# Application constants
APP_NAME = "NodeAssess"
APP_VERSION = "1.0.0"
CONFIG_FILE = "config/default.yaml"

__all__ = [
    'ConfigManager',
    'EngineConfig',
    'ProximityMaxima',
    'default_engine_config',
    'APP_NAME',
    'APP_VERSION',
    'CONFIG_FILE'
]
