"""CSV storage for sweep summaries.

One row per classified class; reloading filters by degree, sorts and
keeps the last row for each (group, class).
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import pandas as pd

from rackit.criteria.types import Certificate

logger = logging.getLogger(__name__)


def summary_row(cert: Certificate) -> Dict[str, Any]:
    info = cert.class_info
    return {
        "group": cert.group,
        "degree": info.get("m", info.get("n")),
        "class": cert.label,
        "verdict": cert.verdict.value,
        "basis": ";".join(cert.basis),
        "construction": cert.construction,
        "class_size": info.get("size"),
        "element_order": info.get("order"),
    }


class SweepStorage:
    """
    pandas-backed CSV of sweep summaries.

    Usage:
        storage = SweepStorage(Path("reports/sweep.csv"))
        storage.save([summary_row(c) for c in certificates], append=True)
        df = storage.load(degree_min=4, degree_max=6)
    """

    COLUMNS = ["group", "degree", "class", "verdict", "basis", "construction", "class_size", "element_order"]

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)

    def save(self, data: Union[pd.DataFrame, List[Dict[str, Any]]], append: bool = False) -> None:
        """
        Args:
            data: DataFrame or summary rows.
            append: Append to an existing file instead of replacing it.

        Raises:
            ValueError: If data is neither a DataFrame nor a list of rows.
        """
        if isinstance(data, pd.DataFrame):
            df = data
        elif isinstance(data, list):
            df = pd.DataFrame(data, columns=self.COLUMNS)
        else:
            raise ValueError("data must be a DataFrame or a list of summary rows")
        df = df[self.COLUMNS]

        self.path.parent.mkdir(parents=True, exist_ok=True)
        exists = self.path.exists()
        df.to_csv(self.path, mode="a" if append and exists else "w", header=not (append and exists), index=False)
        logger.debug(f"Saved {len(df)} rows to {self.path} (append={append})")

    def load(self, degree_min: Optional[int] = None, degree_max: Optional[int] = None) -> pd.DataFrame:
        if not self.path.exists():
            logger.warning(f"File not found: {self.path}")
            return pd.DataFrame(columns=self.COLUMNS)

        df = pd.read_csv(self.path, dtype={"class": str, "basis": str}, keep_default_na=False)
        if degree_min is not None:
            df = df[df["degree"] >= degree_min]
        if degree_max is not None:
            df = df[df["degree"] <= degree_max]
        df = df.drop_duplicates(subset=["group", "class"], keep="last")
        df = df.sort_values(["degree", "group", "class"], kind="stable").reset_index(drop=True)
        logger.debug(f"Loaded {len(df)} rows from {self.path}")
        return df

    def exists(self) -> bool:
        return self.path.exists()

    def count(self) -> int:
        return len(self.load())
