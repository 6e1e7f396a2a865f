"""Run configuration: defaults < key=value file < environment < overrides."""

import logging
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Dict, Optional, Union

from dotenv import dotenv_values

from rackit.config.env import EnvKeys, get_env
from rackit.errors import InputError

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("text", "json")


@dataclass
class RunConfig:
    """
    Budgets and plumbing for classification runs.

    Usage:
        config = load_run_config(Path("rackit.conf"), {"workers": 4})
    """

    search_budget: int = 50_000
    word_depth: int = 12
    cache_path: Optional[Path] = None
    output_format: str = "text"
    workers: int = 1
    twist_word_length: int = 8
    refutation_budget: int = 100_000

    def validate(self) -> "RunConfig":
        """
        Raises:
            InputError: On a non-positive budget or an unknown output format.
        """
        for name in ("search_budget", "word_depth", "workers", "twist_word_length", "refutation_budget"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise InputError(f"{name} must be a positive integer, got {value!r}")
        if self.output_format not in OUTPUT_FORMATS:
            raise InputError(f"output_format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}")
        return self

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["cache_path"] = str(self.cache_path) if self.cache_path else None
        return data


def _coerce(name: str, raw: Any) -> Any:
    if name == "cache_path":
        return Path(raw) if raw not in (None, "") else None
    if name == "output_format":
        return str(raw).strip().lower()
    if isinstance(raw, int) and not isinstance(raw, bool):
        return raw
    try:
        return int(str(raw).replace("_", "").strip())
    except ValueError:
        raise InputError(f"{name} must be an integer, got {raw!r}") from None


def _apply(values: Dict[str, Any], source: Dict[str, Any], origin: str) -> None:
    known = {f.name for f in fields(RunConfig)}
    for key, raw in source.items():
        name = key.strip().lower()
        if name not in known:
            raise InputError(f"Unknown configuration key {key!r} in {origin}")
        if raw is None:
            continue
        values[name] = _coerce(name, raw)


def load_run_config(
    path: Optional[Union[str, Path]] = None,
    overrides: Optional[Dict[str, Any]] = None,
) -> RunConfig:
    """
    Build and validate a RunConfig.

    Args:
        path: Optional flat key=value file, read with dotenv_values.
        overrides: Explicit values (CLI flags); None entries are skipped.

    Raises:
        InputError: On a missing file, unknown key or invalid value.
    """
    values: Dict[str, Any] = {}
    if path is not None:
        path = Path(path)
        if not path.exists():
            raise InputError(f"Config file not found: {path}")
        _apply(values, dict(dotenv_values(path)), str(path))
        logger.debug(f"Loaded run config from {path}")
    cache = get_env(EnvKeys.CACHE)
    if cache:
        values["cache_path"] = Path(cache)
    if overrides:
        _apply(values, overrides, "overrides")
    return RunConfig(**values).validate()
