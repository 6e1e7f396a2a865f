"""Logging: console/file setup, the output tree and CSV logs."""

from rackit.log.csv_logger import CSVLogger, VerdictLogger
from rackit.log.logger import LoggerMixin, get_logger, parse_level, setup_logging
from rackit.log.paths import PathManager

__all__ = [
    "CSVLogger",
    "VerdictLogger",
    "LoggerMixin",
    "get_logger",
    "parse_level",
    "setup_logging",
    "PathManager",
]
