"""Verdicts, certificates and hypothesis reports."""

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from rackit.errors import InputError

SCHEMA_VERSION = "1"


class Verdict(Enum):
    """What a criterion proves about dim 𝔅(O, ρ); never a finiteness claim."""
    INFINITE_ALL_REPS = "InfiniteAllReps"
    INFINITE_WHEN_Q_MINUS_ONE = "InfiniteWhenQMinusOne"
    NO_CRITERION = "NoCriterion"


@dataclass(frozen=True)
class HypothesisCheck:
    """One hypothesis of a conditional theorem; holds is None when left symbolic."""
    name: str
    statement: str
    holds: Optional[bool] = None
    value: Optional[str] = None

    def to_json(self) -> Dict[str, Any]:
        return {"name": self.name, "statement": self.statement, "holds": self.holds, "value": self.value}


@dataclass(frozen=True)
class CharacterReport:
    """Hypotheses of a conditional theorem evaluated for a degree-1 character."""
    theorem: str
    hypotheses: Tuple[HypothesisCheck, ...]
    character: str = ""

    @property
    def symbolic(self) -> bool:
        return any(h.holds is None for h in self.hypotheses)

    @property
    def all_hold(self) -> Optional[bool]:
        if any(h.holds is False for h in self.hypotheses):
            return False
        return None if self.symbolic else True

    @property
    def failing(self) -> List[str]:
        return [h.name for h in self.hypotheses if h.holds is False]

    @property
    def verdict(self) -> Verdict:
        if self.all_hold is False:
            return Verdict.NO_CRITERION
        return Verdict.INFINITE_WHEN_Q_MINUS_ONE

    def to_json(self) -> Dict[str, Any]:
        return {
            "theorem": self.theorem,
            "character": self.character,
            "hypotheses": [h.to_json() for h in self.hypotheses],
        }


@dataclass
class Certificate:
    """
    A classification outcome with everything needed to re-verify it.

    witness and extra_witnesses are family JSON values (see
    rackit.criteria.codec); transporters travel inside them.
    """

    group: str
    class_info: Dict[str, Any]
    verdict: Verdict
    basis: Tuple[str, ...] = ()
    construction: str = ""
    witness: Optional[Dict[str, Any]] = None
    extra_witnesses: Tuple[Dict[str, Any], ...] = ()
    k: Optional[int] = None
    d: Optional[int] = None
    e: Optional[int] = None
    hypotheses: Optional[Dict[str, Any]] = None
    notes: Tuple[str, ...] = ()
    flags: Dict[str, Any] = field(default_factory=dict)
    version: str = ""

    @property
    def label(self) -> str:
        return str(self.class_info.get("type") or self.class_info.get("label", ""))

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "version": self.version,
            "group": self.group,
            "class": self.class_info,
            "verdict": self.verdict.value,
            "basis": list(self.basis),
            "construction": self.construction,
            "witness": self.witness,
        }
        if self.extra_witnesses:
            data["extra_witnesses"] = list(self.extra_witnesses)
        for key in ("k", "d", "e"):
            value = getattr(self, key)
            if value is not None:
                data[key] = value
        if self.hypotheses is not None:
            data["hypotheses"] = self.hypotheses
        if self.notes:
            data["notes"] = list(self.notes)
        if self.flags:
            data["flags"] = self.flags
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Certificate":
        """
        Raises:
            InputError: On an unknown schema, verdict or missing keys.
        """
        if data.get("schema") != SCHEMA_VERSION:
            raise InputError(f"Unsupported certificate schema {data.get('schema')!r}")
        try:
            return cls(
                group=data["group"],
                class_info=dict(data["class"]),
                verdict=Verdict(data["verdict"]),
                basis=tuple(data.get("basis", ())),
                construction=data.get("construction", ""),
                witness=data.get("witness"),
                extra_witnesses=tuple(data.get("extra_witnesses", ())),
                k=data.get("k"),
                d=data.get("d"),
                e=data.get("e"),
                hypotheses=data.get("hypotheses"),
                notes=tuple(data.get("notes", ())),
                flags=dict(data.get("flags", {})),
                version=data.get("version", ""),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"Malformed certificate: {e}") from None


def certificate_to_json(cert: Certificate) -> str:
    """Canonical JSON text: sorted keys, no whitespace."""
    return json.dumps(cert.to_dict(), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def certificate_from_json(text: str) -> Certificate:
    """
    Raises:
        InputError: If the text is not a certificate.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"Certificate is not valid JSON: {e}") from None
    if not isinstance(data, dict):
        raise InputError("Certificate JSON must be an object")
    return Certificate.from_dict(data)
