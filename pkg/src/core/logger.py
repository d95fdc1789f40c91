"""Centralized logging configuration."""
import logging
import sys
from pathlib import Path

from .logging_config import LOG_FILE, LOG_FORMAT, LOG_LEVEL

_configured_loggers = set()


def setup_logger(name: str) -> logging.Logger:
    """Create and configure a logger instance for a module.

    Args:
        name: The name of the module or class requesting the logger

    Returns:
        A configured logger instance
    """
    logger = logging.getLogger(name)

    if not logger.handlers:  # Avoid adding handlers multiple times
        formatter = logging.Formatter(LOG_FORMAT)

        if LOG_FILE:
            Path(LOG_FILE).parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.FileHandler(LOG_FILE)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

        # stdout carries CSV and JSON output
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

        logger.setLevel(getattr(logging, LOG_LEVEL, logging.INFO))
        logger.propagate = False
        _configured_loggers.add(name)

    return logger


def set_log_level(level: str) -> None:
    """Re-level every logger created through setup_logger.

    Args:
        level: Level name such as DEBUG or WARNING

    Raises:
        ValueError: If the level name is unknown
    """
    numeric = logging.getLevelName(level.upper())
    if not isinstance(numeric, int):
        raise ValueError(f"Unknown log level: {level}")
    for name in _configured_loggers:
        logging.getLogger(name).setLevel(numeric)
