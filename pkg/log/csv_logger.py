"""Append-only CSV logs with one file per day."""

import csv
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional

from rackit.criteria.types import Certificate
from rackit.log.paths import PathManager


class CSVLogger:
    """
    CSV rows under the PathManager tree, header on first write.

    Usage:
        with CSVLogger(paths, name="search", columns=["class", "pairs"]) as log:
            log.log_row({"class": "2,1^3", "pairs": 12})
    """

    def __init__(
        self,
        path_manager: PathManager,
        name: str,
        columns: Optional[List[str]] = None,
        directory: str = "reports",
    ):
        """
        Args:
            path_manager: Output tree.
            name: Base name of the CSV file.
            columns: Column headers. If None, the first row defines them.
            directory: Subdirectory under the tree's base.
        """
        self.path_manager = path_manager
        self.name = name
        self.directory = directory
        self.columns = columns

        self._file_path: Optional[Path] = None
        self._file_handle = None
        self._writer = None
        self._current_date: Optional[str] = None

    @property
    def path(self) -> Optional[Path]:
        return self._file_path

    def _ensure_file(self) -> None:
        today = datetime.now().strftime("%Y-%m-%d")
        if self._current_date != today:
            self.close()
            self._current_date = today

        if self._file_handle is None:
            self._file_path = self.path_manager.get_custom_path(self.directory, self.name, "csv")
            is_new = not self._file_path.exists()
            self._file_handle = open(self._file_path, "a", newline="", encoding="utf-8")
            self._writer = csv.DictWriter(self._file_handle, fieldnames=self.columns or [], extrasaction="ignore")
            if is_new and self.columns:
                self._writer.writeheader()
                self._file_handle.flush()

    def log_row(self, data: Dict[str, Any]) -> None:
        if self.columns is None:
            self.columns = list(data.keys())
        self._ensure_file()
        row = {
            key: value.strftime("%Y-%m-%d %H:%M:%S") if isinstance(value, datetime) else value
            for key, value in data.items()
        }
        self._writer.writerow(row)
        self._file_handle.flush()

    def log_rows(self, rows: List[Dict[str, Any]]) -> None:
        for row in rows:
            self.log_row(row)

    def close(self) -> None:
        if self._file_handle is not None:
            self._file_handle.close()
            self._file_handle = None
            self._writer = None

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()
        return False


class VerdictLogger(CSVLogger):
    """One row per classified class."""

    DEFAULT_COLUMNS = [
        "timestamp",
        "group",
        "class",
        "verdict",
        "basis",
        "construction",
        "members",
        "defects",
    ]

    def __init__(self, path_manager: PathManager, name: str = "verdicts"):
        super().__init__(path_manager=path_manager, name=name, columns=list(self.DEFAULT_COLUMNS))

    def log_certificate(self, cert: Certificate, defects: int = 0) -> None:
        """
        Args:
            cert: The certificate to record.
            defects: Defects seen while producing it.
        """
        members = 0
        if cert.witness is not None:
            members = sum(
                len(cert.witness.get(key, ())) for key in ("mu", "nu", "sigma", "tau")
            )
        self.log_row({
            "timestamp": datetime.now(timezone.utc),
            "group": cert.group,
            "class": cert.label,
            "verdict": cert.verdict.value,
            "basis": ";".join(cert.basis),
            "construction": cert.construction,
            "members": members,
            "defects": defects,
        })
