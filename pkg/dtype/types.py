"""Dihedral-shaped family types.

Members are stored in index order μ_0..μ_{p-1}; indices are read mod p.
"""

from dataclasses import dataclass
from typing import Any, Dict, Generic, Optional, Tuple, TypeVar

from rackit.errors import InputError

E = TypeVar("E")


@dataclass(frozen=True)
class DpFamily(Generic[E]):
    """(μ_i) indexed by Z/p with μ_i ▷ μ_j = μ_{2i-j}."""
    p: int
    members: Tuple[E, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if self.p < 2:
            raise InputError(f"p must be at least 2, got {self.p}")
        if len(self.members) != self.p:
            raise InputError(f"Expected {self.p} members, got {len(self.members)}")

    def __getitem__(self, i: int) -> E:
        return self.members[i % self.p]

    def __iter__(self):
        return iter(self.members)

    def to_json(self, group: Any) -> Dict[str, Any]:
        return {"p": self.p, "mu": [group.element_to_json(x) for x in self.members]}


@dataclass(frozen=True)
class Dp2Family(Generic[E]):
    """(μ, ν) with the cross relations μ_i ▷ ν_j = ν_{2i-j}, ν_i ▷ μ_j = μ_{2i-j}."""
    mu: DpFamily[E]
    nu: DpFamily[E]
    g_inf: Optional[E] = None

    def __post_init__(self):
        if self.mu.p != self.nu.p:
            raise InputError(f"Families of different p: {self.mu.p} and {self.nu.p}")

    @property
    def p(self) -> int:
        return self.mu.p

    @property
    def members(self) -> Tuple[E, ...]:
        return self.mu.members + self.nu.members

    def with_transporter(self, g_inf: E) -> "Dp2Family[E]":
        return Dp2Family(self.mu, self.nu, g_inf)

    def to_json(self, group: Any) -> Dict[str, Any]:
        data = {
            "kind": "dp2",
            "p": self.p,
            "mu": [group.element_to_json(x) for x in self.mu.members],
            "nu": [group.element_to_json(x) for x in self.nu.members],
        }
        if self.g_inf is not None:
            data["g_inf"] = group.element_to_json(self.g_inf)
        return data


@dataclass(frozen=True)
class DpTransporters(Generic[E]):
    """g_i = μ_{i/2} and f_i = ν_{i/2}·g_∞."""
    g: Tuple[E, ...]
    f: Tuple[E, ...]


@dataclass(frozen=True)
class TransporterCocycleReport(Generic[E]):
    """The constant values of the twists α_ij, β_ij, γ_ij, δ_ij."""
    alpha: E
    beta: E
    gamma: E
    delta: E
    pairs_checked: int = 0


@dataclass(frozen=True)
class Dp2Consequences(Generic[E]):
    """Common values forced on a D_p^(2) family with p odd."""
    mu_square: E
    nu_square: E
    mu_nu: E
    nu_mu: E
    laws_checked: int = 0


@dataclass(frozen=True)
class SplitReport(Generic[E]):
    """Bookkeeping of a symmetric-group construction: named helper permutations."""
    construction: str
    helpers: Tuple[Tuple[str, E], ...] = ()
    identities: Tuple[str, ...] = ()

    def helper(self, name: str) -> E:
        for key, value in self.helpers:
            if key == name:
                return value
        raise KeyError(name)


@dataclass(frozen=True)
class D3SearchResult(Generic[E]):
    """Outcome of the bounded generic D_3 search."""
    family: Optional[DpFamily[E]]
    pairs_checked: int
    exhausted: bool

    @property
    def found(self) -> bool:
        return self.family is not None
