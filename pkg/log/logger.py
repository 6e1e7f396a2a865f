"""Logging setup with console and file output.

The console handler writes to stderr so that stdout carries only
reports; the file handler, when a PathManager is given, records
everything at DEBUG.
"""

import logging
import sys
from typing import Optional, Union

from rackit.errors import InputError
from rackit.log.paths import PathManager

CONSOLE_FORMAT = "%(asctime)s | %(levelname)-8s | %(message)s"
FILE_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"


def parse_level(level: Union[int, str]) -> int:
    """
    "debug" / "INFO" / 10 -> logging level.

    Raises:
        InputError: On an unknown level name.
    """
    if isinstance(level, int):
        return level
    value = logging.getLevelName(level.strip().upper())
    if not isinstance(value, int):
        raise InputError(f"Unknown log level {level!r}")
    return value


def setup_logging(
    name: str = "rackit",
    path_manager: Optional[PathManager] = None,
    level: Union[int, str] = logging.INFO,
    console_level: Optional[int] = None,
    file_level: Optional[int] = None,
) -> logging.Logger:
    """
    Configure a named logger; module loggers below it propagate to it.

    Args:
        name: Logger name ("rackit" covers every library module).
        path_manager: Output tree for the log file; no file without it.
        level: Console level.
        console_level: Overrides level for the console.
        file_level: File handler level (DEBUG when unset).

    Returns:
        The configured logger.
    """
    level = parse_level(level)
    logger = logging.getLogger(name)
    logger.setLevel(logging.DEBUG)
    logger.handlers.clear()

    console = logging.StreamHandler(sys.stderr)
    console.setLevel(console_level or level)
    console.setFormatter(logging.Formatter(CONSOLE_FORMAT, datefmt="%H:%M:%S"))
    logger.addHandler(console)

    if path_manager:
        file_handler = logging.FileHandler(path_manager.get_log_path())
        file_handler.setLevel(file_level or logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(FILE_FORMAT, datefmt="%Y-%m-%d %H:%M:%S"))
        logger.addHandler(file_handler)

    return logger


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


class LoggerMixin:
    """
    Lazy per-instance logger for long-lived objects.

    Usage:
        class Sweep(LoggerMixin):
            def __init__(self, path_manager):
                self.setup_logger("rackit", path_manager)
    """

    _logger: Optional[logging.Logger] = None

    def setup_logger(
        self,
        name: str,
        path_manager: Optional[PathManager] = None,
        level: Union[int, str] = logging.INFO,
    ) -> None:
        self._logger = setup_logging(name, path_manager, level)

    @property
    def logger(self) -> logging.Logger:
        if self._logger is None:
            self._logger = logging.getLogger(f"rackit.{self.__class__.__name__}")
        return self._logger
