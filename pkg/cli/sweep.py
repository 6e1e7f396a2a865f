"""Sweep every cycle type of S_m over a range of degrees."""

from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional, Tuple

from rackit.config.run import RunConfig
from rackit.criteria.classify import classify_sym_class
from rackit.criteria.types import Certificate
from rackit.cli.report import Report
from rackit.data.cache import ResultCache
from rackit.data.storage import SweepStorage, summary_row
from rackit.errors import InputError
from rackit.log.csv_logger import VerdictLogger
from rackit.log.logger import LoggerMixin
from rackit.log.paths import PathManager
from rackit.perm import ops
from rackit.version import __version__

MIN_DEGREE = 2
MAX_DEGREE = 14


def parse_degrees(text: str) -> range:
    """
    "4..6" -> range(4, 7); "5" -> range(5, 6).

    Raises:
        InputError: On malformed text or degrees outside 2..14.
    """
    lo, sep, hi = text.strip().partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise InputError(f"Malformed degree range {text!r}; expected a..b") from None
    if a > b:
        raise InputError(f"Empty degree range {text!r}")
    if a < MIN_DEGREE or b > MAX_DEGREE:
        raise InputError(f"Sweep degrees must lie in {MIN_DEGREE}..{MAX_DEGREE}, got {text!r}")
    return range(a, b + 1)


def _classify_task(task: Tuple[int, str, int]) -> Dict[str, Any]:
    m, label, budget = task
    return classify_sym_class(m, label, search_budget=budget).to_dict()


class Sweep(LoggerMixin):
    """
    Classify every class of S_m for m in a degree range.

    Lifecycle: _setup opens the cache and the CSV logs, _classify_one
    handles a class, _cleanup writes the summary and closes everything.
    Cache writes happen in this process only; workers return certificates.

    Usage:
        report = Sweep(range(4, 7), config, paths).run()
    """

    def __init__(self, degrees: range, config: RunConfig, path_manager: Optional[PathManager] = None):
        if degrees.start < MIN_DEGREE or degrees.stop - 1 > MAX_DEGREE:
            raise InputError(f"Sweep degrees must lie in {MIN_DEGREE}..{MAX_DEGREE}")
        self.degrees = degrees
        self.config = config
        self.path_manager = path_manager
        self.cache: Optional[ResultCache] = None
        self.verdicts: Optional[VerdictLogger] = None
        self.storage: Optional[SweepStorage] = None
        self.report = Report(
            "sweep",
            {"degrees": f"{degrees.start}..{degrees.stop - 1}", "search_budget": config.search_budget},
        )

    # === Lifecycle Hooks ===

    def _setup(self) -> None:
        if self.config.cache_path is not None:
            self.cache = ResultCache(self.config.cache_path)
        if self.path_manager is not None:
            self.verdicts = VerdictLogger(self.path_manager, name="verdicts")
            name = f"sweep_{self.degrees.start}-{self.degrees.stop - 1}"
            self.storage = SweepStorage(self.path_manager.get_report_path(name, "csv"))

    def _cached(self, m: int, label: str) -> Optional[Certificate]:
        if self.cache is None:
            return None
        return self.cache.get(f"sym:{m}", label, __version__)

    def _classify_one(self, m: int, label: str) -> Certificate:
        cert = self._cached(m, label)
        if cert is None:
            cert = classify_sym_class(m, label, search_budget=self.config.search_budget)
            if self.cache is not None:
                self.cache.put(cert)
        return cert

    def _record(self, cert: Certificate) -> None:
        self.report.add(cert)
        if self.verdicts is not None:
            self.verdicts.log_certificate(cert)

    def _cleanup(self) -> None:
        if self.storage is not None and self.report.certificates:
            self.storage.save([summary_row(c) for c in self.report.certificates])
        if self.verdicts is not None:
            self.verdicts.close()
        if self.cache is not None:
            self.cache.log_stats()

    # === Main Lifecycle ===

    def _classes(self) -> List[Tuple[int, str]]:
        return [(m, str(t)) for m in self.degrees for t in ops.iter_cycle_types(m)]

    def _run_parallel(self, classes: List[Tuple[int, str]]) -> None:
        todo = [(m, label) for m, label in classes if self._cached(m, label) is None]
        tasks = [(m, label, self.config.search_budget) for m, label in todo]
        with ProcessPoolExecutor(max_workers=self.config.workers) as pool:
            computed = {
                key: Certificate.from_dict(data)
                for key, data in zip(todo, pool.map(_classify_task, tasks))
            }
        for key in classes:
            cert = computed.get(key)
            if cert is None:
                cert = self._classify_one(*key)
            elif self.cache is not None:
                self.cache.put(cert)
            self._record(cert)

    def run(self) -> Report:
        """Run the sweep; certificates come back in class order."""
        self.logger.info("=" * 60)
        self.logger.info(f"Starting sweep of S_{self.degrees.start}..S_{self.degrees.stop - 1}")
        self.logger.info("=" * 60)
        self._setup()
        try:
            classes = self._classes()
            with self.report.phase("classify"):
                if self.config.workers > 1:
                    self._run_parallel(classes)
                else:
                    for m, label in classes:
                        self._record(self._classify_one(m, label))
        finally:
            self._cleanup()
        self.logger.info(f"Sweep finished: {len(self.report.certificates)} certificates")
        return self.report
