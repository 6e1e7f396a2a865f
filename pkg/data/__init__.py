"""Persistence: the certificate cache and sweep summaries."""

from rackit.data.cache import ResultCache
from rackit.data.storage import SweepStorage, summary_row

__all__ = ["ResultCache", "SweepStorage", "summary_row"]
