"""Command reports: certificates, echoed inputs, phase timings and defects.

Timings are kept beside the certificates, never inside them, so the
certificate payload of two runs is byte-identical.
"""

import json
import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterator, List

from rackit.criteria.types import SCHEMA_VERSION, Certificate, certificate_to_json
from rackit.criteria.verify import verify_certificate
from rackit.errors import DefectError
from rackit.version import __version__

logger = logging.getLogger(__name__)


@dataclass
class Report:
    """
    Output of one CLI command.

    Usage:
        report = Report("classify", {"group": "sym:6", "class": "3,2,1"})
        with report.phase("classify"):
            report.add(classify_sym_class(6, "3,2,1"))
    """

    command: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    certificates: List[Certificate] = field(default_factory=list)
    results: Dict[str, Any] = field(default_factory=dict)
    timing: Dict[str, float] = field(default_factory=dict)
    defects: List[str] = field(default_factory=list)

    @contextmanager
    def phase(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            self.timing[name] = round(self.timing.get(name, 0.0) + time.perf_counter() - start, 6)

    def add(self, cert: Certificate) -> None:
        """
        Raises:
            DefectError: If the certificate does not re-verify.
        """
        if not verify_certificate(cert):
            self.defects.append(f"{cert.group} {cert.label}: certificate fails re-verification")
            raise DefectError("certificate-reverification", f"{cert.group} {cert.label}")
        self.certificates.append(cert)

    @property
    def ok(self) -> bool:
        return not self.defects

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "version": __version__,
            "command": self.command,
            "inputs": self.inputs,
            "certificates": [c.to_dict() for c in self.certificates],
            "timing": self.timing,
            "defects": list(self.defects),
        }
        if self.results:
            data["results"] = self.results
        return data

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False, sort_keys=True)

    def canonical_certificates(self) -> List[str]:
        return [certificate_to_json(c) for c in self.certificates]

    def render_text(self) -> str:
        lines = [f"rackit {__version__} {self.command}"]
        for key, value in self.inputs.items():
            lines.append(f"  {key}: {value}")
        for cert in self.certificates:
            basis = ", ".join(cert.basis) or "-"
            lines.append(f"{cert.group:<10} {cert.label:<16} {cert.verdict.value:<22} {cert.construction:<20} [{basis}]")
            for note in cert.notes:
                lines.append(f"    note: {note}")
        for key, value in self.results.items():
            lines.append(f"{key}: {value}")
        if self.defects:
            lines.append(f"DEFECTS ({len(self.defects)}):")
            lines.extend(f"  {d}" for d in self.defects)
        return "\n".join(lines)

    def save(self, path: Path) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json() + "\n", encoding="utf-8")
        logger.info(f"Report written to {path}")
