"""Utilities Module - Logging, errors and run configuration"""

from .logger import setup_logger, get_logger, LoggerMixin
from .errors import (
    FieldLabError,
    ValidationError,
    EmptyLatticeError,
    AliasingError,
    LightConeError,
    ConfigurationError,
)
from .config import RunConfig, load_run_config, load_settings, SUITES

__all__ = [
    "setup_logger",
    "get_logger",
    "LoggerMixin",
    "FieldLabError",
    "ValidationError",
    "EmptyLatticeError",
    "AliasingError",
    "LightConeError",
    "ConfigurationError",
    "RunConfig",
    "load_run_config",
    "load_settings",
    "SUITES",
]
