"""Configuration management main class."""
import os

import yaml

from src.core.errors import ConfigValidationError
from src.core.logger import setup_logger

from .defaults import get_default_config
from .engine import EngineConfig
from .validation import validate_engine_config


class ConfigManager:
    """Handles engine configuration loading and saving.

    Files are parsed with yaml.safe_load, so both YAML and JSON documents
    are accepted.
    """

    def __init__(self):
        """Initialize configuration manager with defaults."""
        self.logger = setup_logger(self.__class__.__name__)
        self.config = validate_engine_config(get_default_config())

    def load_config(self, file_path):
        """Load configuration from file.

        Args:
            file_path: Path to a YAML or JSON configuration file

        Returns:
            EngineConfig: The loaded configuration

        Raises:
            FileNotFoundError: If file doesn't exist
            ConfigValidationError: If configuration is invalid
        """
        if not os.path.exists(file_path):
            raise FileNotFoundError(f"Config file not found: {file_path}")

        try:
            with open(file_path, 'r') as f:
                config = yaml.safe_load(f)
        except yaml.YAMLError as e:
            self.logger.error(f"Failed to parse config file: {str(e)}")
            raise ConfigValidationError(f"Invalid YAML/JSON format in {file_path}: {str(e)}")

        self.config = validate_engine_config(config)
        self.logger.info(f"Loaded configuration from {file_path}")
        return self.engine_config()

    def save_config(self, file_path):
        """Save configuration to file.

        Args:
            file_path: Path to save configuration to

        Raises:
            OSError: If save fails
        """
        try:
            directory = os.path.dirname(file_path)
            if directory:
                os.makedirs(directory, exist_ok=True)

            data = dict(self.config)
            data['delta'] = list(data['delta'])
            with open(file_path, 'w') as f:
                yaml.safe_dump(data, f, default_flow_style=False, sort_keys=False)

            self.logger.info(f"Saved configuration to {file_path}")

        except OSError as e:
            self.logger.error(f"Failed to save config file: {str(e)}")
            raise

    def get_config(self):
        """Get current configuration.

        Returns:
            dict: Current normalized configuration
        """
        return self.config

    def set_config(self, config):
        """Set new configuration.

        Args:
            config: New (possibly partial) configuration dictionary

        Raises:
            ConfigValidationError: If configuration is invalid
        """
        self.config = validate_engine_config(config)
        self.logger.info("Configuration updated")

    def update_config(self, **overrides):
        """Override individual keys of the current configuration.

        Raises:
            ConfigValidationError: If the result is invalid
        """
        self.config = validate_engine_config({**self.config, **overrides})

    def clear_config(self):
        """Reset configuration to defaults."""
        self.config = validate_engine_config(get_default_config())
        self.logger.info("Configuration reset to defaults")

    def engine_config(self):
        """Build the immutable engine configuration.

        Returns:
            EngineConfig: Validated configuration object
        """
        return EngineConfig.from_dict(self.config)
