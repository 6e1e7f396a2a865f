"""Command-line frontend: reports, sweeps, example replays."""

from rackit.cli.examples import EXAMPLES, ReplayResult, run_examples
from rackit.cli.main import build_parser, main
from rackit.cli.report import Report
from rackit.cli.sweep import MAX_DEGREE, MIN_DEGREE, Sweep, parse_degrees

__all__ = [
    "EXAMPLES",
    "ReplayResult",
    "run_examples",
    "build_parser",
    "main",
    "Report",
    "MAX_DEGREE",
    "MIN_DEGREE",
    "Sweep",
    "parse_degrees",
]
