"""Exception hierarchy and diagnosis values.

Negative answers from verifiers are values (Diagnosis), not exceptions.
Exceptions are reserved for bad input, exhausted budgets and defects.
"""

from dataclasses import dataclass, field
from typing import Generic, Optional, Tuple, TypeVar

T = TypeVar("T")


class RackitError(Exception):
    """Base class for all rackit errors."""


class InputError(RackitError, ValueError):
    """A pre-condition or hypothesis of an operation is violated."""


class BudgetExceeded(RackitError):
    """A bounded search ran out of budget before reaching an answer."""

    def __init__(self, message: str, budget: int):
        super().__init__(message)
        self.budget = budget


class DefectError(RackitError):
    """
    A check that must pass by a proven law failed.

    The tag names the violated law so reports can group defects.
    """

    def __init__(self, tag: str, message: str):
        super().__init__(f"[{tag}] {message}")
        self.tag = tag


@dataclass(frozen=True)
class Diagnosis:
    """Outcome of a verification: ok flag, reason and offending indices."""
    ok: bool
    reason: str = ""
    witness: Tuple = ()
    checked: int = 0

    @classmethod
    def passed(cls, checked: int = 0) -> "Diagnosis":
        return cls(ok=True, reason="ok", checked=checked)

    @classmethod
    def failed(cls, reason: str, witness: Tuple = (), checked: int = 0) -> "Diagnosis":
        return cls(ok=False, reason=reason, witness=tuple(witness), checked=checked)

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class FamilyCheck(Generic[T]):
    """A verified family, or the diagnosis explaining why there is none."""
    family: Optional[T]
    diagnosis: Diagnosis = field(default_factory=Diagnosis.passed)

    @property
    def ok(self) -> bool:
        return self.family is not None and self.diagnosis.ok

    def unwrap(self, tag: str = "verification") -> T:
        """
        Return the family or raise.

        Raises:
            DefectError: If the check failed.
        """
        if self.family is None or not self.diagnosis.ok:
            raise DefectError(tag, self.diagnosis.reason)
        return self.family
