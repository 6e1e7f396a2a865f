"""JSON-lines result cache keyed by (group, class, version)."""

import json
import logging
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from rackit.criteria.types import Certificate
from rackit.errors import InputError
from rackit.log.logger import LoggerMixin

Key = Tuple[str, str, str]


class ResultCache(LoggerMixin):
    """
    Certificates stored one JSON record per line.

    Records look like {"key": {"group", "class", "version"}, "certificate": {...}}.
    A later record for the same key shadows earlier ones. Corrupt lines are
    skipped with a warning and the class is recomputed by the caller.

    Usage:
        cache = ResultCache(Path("cache/results.jsonl"))
        cert = cache.get("sym:6", "3,1^3", __version__)
        if cert is None:
            cache.put(classify_sym_class(6, "3,1^3"))
    """

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)
        self.hits = 0
        self.misses = 0
        self.corrupt = 0
        self._entries: Dict[Key, Certificate] = {}
        self._load()

    def _load(self) -> None:
        if not self.path.exists():
            return
        with open(self.path, encoding="utf-8") as f:
            for lineno, line in enumerate(f, 1):
                if not line.strip():
                    continue
                try:
                    record = json.loads(line)
                    key = record["key"]
                    cert = Certificate.from_dict(record["certificate"])
                    self._entries[(key["group"], key["class"], key["version"])] = cert
                except (json.JSONDecodeError, KeyError, TypeError, InputError) as e:
                    self.corrupt += 1
                    self.logger.warning(f"Skipping corrupt cache line {lineno} in {self.path}: {e}")
        self.logger.debug(f"Cache {self.path}: {len(self._entries)} entries")

    def __len__(self) -> int:
        return len(self._entries)

    def get(self, group: str, label: str, version: str) -> Optional[Certificate]:
        cert = self._entries.get((group, label, version))
        if cert is None:
            self.misses += 1
        else:
            self.hits += 1
            self.logger.debug(f"Cache hit {group} {label}")
        return cert

    def put(self, cert: Certificate) -> None:
        """Append a certificate; the caller is the single writer."""
        key = (cert.group, cert.label, cert.version)
        record = {
            "key": {"group": key[0], "class": key[1], "version": key[2]},
            "certificate": cert.to_dict(),
        }
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a", encoding="utf-8") as f:
            f.write(json.dumps(record, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n")
            f.flush()
        self._entries[key] = cert

    def log_stats(self) -> None:
        self.logger.info(f"Cache: {self.hits} hits, {self.misses} misses, {self.corrupt} corrupt lines")
