"""Octahedral family types.

Members are numbered 1..6 as in the octahedral rack table; fam[i] is σ_i.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Generic, Optional, Tuple, TypeVar

from rackit.errors import InputError

E = TypeVar("E")


@dataclass(frozen=True)
class OctaFamily(Generic[E]):
    """(σ_1, ..., σ_6) with σ_i ▷ σ_j = σ_{i▷j}."""
    members: Tuple[E, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if len(self.members) != 6:
            raise InputError(f"An octahedral family has 6 members, got {len(self.members)}")

    def __getitem__(self, i: int) -> E:
        if not 1 <= i <= 6:
            raise IndexError(f"Octahedral index must be in 1..6, got {i}")
        return self.members[i - 1]

    def __iter__(self):
        return iter(self.members)

    def to_json(self, group: Any) -> Dict[str, Any]:
        return {"kind": "octa", "sigma": [group.element_to_json(x) for x in self.members]}


@dataclass(frozen=True)
class Octa2Family(Generic[E]):
    """(σ, τ) with σ_i ▷ τ_j = τ_{i▷j}, τ_i ▷ σ_j = σ_{i▷j}; g ▷ σ_1 = τ_1 when g is set."""
    sigma: OctaFamily[E]
    tau: OctaFamily[E]
    g: Optional[E] = None

    @property
    def members(self) -> Tuple[E, ...]:
        return self.sigma.members + self.tau.members

    def with_transporter(self, g: E) -> "Octa2Family[E]":
        return Octa2Family(self.sigma, self.tau, g)

    def to_json(self, group: Any) -> Dict[str, Any]:
        data = {
            "kind": "octa2",
            "sigma": [group.element_to_json(x) for x in self.sigma.members],
            "tau": [group.element_to_json(x) for x in self.tau.members],
        }
        if self.g is not None:
            data["g"] = group.element_to_json(self.g)
        return data


@dataclass(frozen=True)
class OctaConsequences(Generic[E]):
    """Common fourth power and common product σ_1σ_6 of a verified family."""
    fourth_power: E
    product: E
    laws_checked: int = 0


@dataclass(frozen=True)
class SigmaTauConsequences(Generic[E]):
    """Common product σ_1τ_6 and common quotient σ_j⁻¹τ_j of an 𝔒^(2) family."""
    product: E
    quotient: E
    laws_checked: int = 0


@dataclass(frozen=True)
class OctaTransporters(Generic[E]):
    """g_1..g_12 with g_j ▷ σ_1 = σ_j (j ≤ 6) and τ_{j-6} (j ≥ 7); stored 0-based."""
    g: Tuple[E, ...]

    def __getitem__(self, j: int) -> E:
        return self.g[j - 1]


@dataclass(frozen=True)
class TwistWord:
    """A twist g_{i▷j}⁻¹ x_i g_j written as a product of powers of its shape's generators."""
    i: int
    j: int
    shape: str
    exponents: Tuple[int, ...]

    @property
    def parity(self) -> int:
        return sum(self.exponents) % 2


@dataclass
class OctaTransporterReport(Generic[E]):
    """Outcome of the 144-twist suite."""
    transporters: OctaTransporters[E]
    twists: Tuple[TwistWord, ...] = ()
    shape_counts: Dict[str, int] = field(default_factory=dict)
    power_case: bool = False
    power_exponents: Tuple[int, ...] = ()

    @property
    def all_odd(self) -> bool:
        return all(t.parity == 1 for t in self.twists)


@dataclass(frozen=True)
class RefutationResult(Generic[E]):
    """Bounded search for octahedral families through the canonical N-cycle."""
    n: int
    candidates: int
    scanned: int
    exhaustive: bool
    family: Optional[OctaFamily[E]] = None

    @property
    def found(self) -> bool:
        return self.family is not None


@dataclass(frozen=True)
class OctaCocycleReport:
    """Cocycle on the span of the transported vectors against the constant −1 cocycle."""
    cocycle: Any
    target: Any
    isomorphic: bool
