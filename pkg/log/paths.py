"""Output tree for logs, reports and the result cache.

Standard structure:
    base_dir/
    ├── logs/      <run>_<YYYY-MM-DD>.log
    ├── reports/   <name>_<YYYY-MM-DD>.json | .csv
    └── cache/     results.jsonl
"""

from datetime import datetime
from pathlib import Path
from typing import Optional


class PathManager:
    """
    Owns the output directories of a run.

    Usage:
        paths = PathManager(Path("out"), run_name="sweep")
        paths.get_report_path("sweep_4-6", "json")
    """

    def __init__(self, base_dir: Optional[Path] = None, run_name: str = "rackit"):
        """
        Args:
            base_dir: Root of the tree. Defaults to the current working directory.
            run_name: Used in log file names.
        """
        self.base_dir = Path(base_dir) if base_dir else Path.cwd()
        self.run_name = run_name

        self.logs_dir = self.base_dir / "logs"
        self.reports_dir = self.base_dir / "reports"
        self.cache_dir = self.base_dir / "cache"

        for directory in (self.logs_dir, self.reports_dir, self.cache_dir):
            directory.mkdir(parents=True, exist_ok=True)

    def _get_date_str(self) -> str:
        return datetime.now().strftime("%Y-%m-%d")

    def get_log_path(self, name: Optional[str] = None) -> Path:
        """Path like logs/sweep_2026-01-10.log."""
        name = name or self.run_name
        return self.logs_dir / f"{name}_{self._get_date_str()}.log"

    def get_report_path(self, name: str, extension: str = "json") -> Path:
        """Path like reports/sweep_4-6_2026-01-10.json."""
        return self.reports_dir / f"{name}_{self._get_date_str()}.{extension}"

    def get_cache_path(self, name: str = "results") -> Path:
        return self.cache_dir / f"{name}.jsonl"

    def get_custom_path(
        self,
        directory: str,
        name: str,
        extension: str = "csv",
        include_date: bool = True,
    ) -> Path:
        """
        Path under base_dir/directory with the tree's naming scheme.

        Args:
            directory: Subdirectory name, created if missing.
            name: Base filename.
            extension: File extension.
            include_date: Append the current date to the name.
        """
        target_dir = self.base_dir / directory
        target_dir.mkdir(parents=True, exist_ok=True)
        stem = f"{name}_{self._get_date_str()}" if include_date else name
        return target_dir / f"{stem}.{extension}"
