"""
Logging utilities for the field quantization laboratory

Every record carries a ``component`` (the suite, pipeline or module that
emitted it) so interleaved output from the suites stays attributable.
"""

import os
import sys
from pathlib import Path
from typing import Optional

from loguru import logger

LOG_LEVEL_ENV = "FIELDLAB_LOG_LEVEL"
DEFAULT_COMPONENT = "fieldlab"

CONSOLE_FORMAT = (
    "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{extra[component]}</cyan> - <level>{message}</level>"
)
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {extra[component]} | {name}:{line} - {message}"

_configured = False


def setup_logger(
    log_level: str = "INFO",
    log_file: Optional[str] = None,
    rotation: str = "10 MB",
    retention: str = "7 days",
    serialize: bool = False,
    force: bool = False
) -> None:
    """
    Configure console and optional file sinks.

    Args:
        log_level: DEBUG, INFO, WARNING, ERROR or CRITICAL; FIELDLAB_LOG_LEVEL wins if set
        log_file: Path to log file (optional)
        rotation: When to rotate the log file
        retention: How long to keep rotated files
        serialize: Write the file sink as JSON lines
        force: Replace sinks installed by an earlier call
    """
    global _configured

    if _configured and not force:
        return

    level = os.getenv(LOG_LEVEL_ENV, log_level).upper()

    logger.remove()
    logger.configure(extra={"component": DEFAULT_COMPONENT})
    logger.add(sys.stderr, format=CONSOLE_FORMAT, level=level, colorize=True)

    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        logger.add(
            log_file,
            format=FILE_FORMAT,
            level=level,
            rotation=rotation,
            retention=retention,
            serialize=serialize,
        )

    _configured = True
    logger.bind(component="logger").debug(f"Logging at {level}, file={log_file or 'none'}")


def get_logger(name: Optional[str] = None):
    """
    Logger bound to a component name.

    Module loggers pass ``__name__``; the ``src.`` prefix is dropped.
    """
    if not _configured:
        setup_logger(log_level="WARNING")

    if not name:
        return logger.bind(component=DEFAULT_COMPONENT)
    return logger.bind(component=name[4:] if name.startswith("src.") else name)


class LoggerMixin:
    """Gives a class a ``logger`` bound to its class name"""

    @property
    def logger(self):
        if not hasattr(self, "_logger"):
            self._logger = get_logger(self.__class__.__name__)
        return self._logger
