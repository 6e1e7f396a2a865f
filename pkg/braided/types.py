"""Exact scalars, cocycles, coset sections and degree-1 characters."""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any, Dict, Generic, List, Optional, Sequence, Tuple, TypeVar

import sympy

from rackit.errors import InputError
from rackit.rack.types import RackTable

E = TypeVar("E")


@dataclass(frozen=True, eq=False)
class RootOfUnity:
    """
    e^{2πi·exponent/order}.

    Equality compares the reduced fraction exponent/order, so (2, 1) and
    (4, 2) are the same scalar.
    """

    order: int
    exponent: int = 0

    def __post_init__(self):
        if self.order < 1:
            raise InputError(f"Root of unity order must be positive, got {self.order}")
        object.__setattr__(self, "exponent", self.exponent % self.order)

    @classmethod
    def one(cls) -> "RootOfUnity":
        return cls(1, 0)

    @classmethod
    def minus_one(cls) -> "RootOfUnity":
        return cls(2, 1)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.exponent, self.order)

    @property
    def is_one(self) -> bool:
        return self.exponent == 0

    @property
    def is_minus_one(self) -> bool:
        return self.fraction == Fraction(1, 2)

    def lift(self, order: int) -> "RootOfUnity":
        """Same scalar written with a multiple of the current order."""
        if order % self.order:
            raise InputError(f"Cannot lift order {self.order} to {order}")
        return RootOfUnity(order, self.exponent * (order // self.order))

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        order = self.order * other.order // gcd(self.order, other.order)
        return RootOfUnity(order, self.lift(order).exponent + other.lift(order).exponent)

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.order, self.exponent * k)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(self.order, -self.exponent)

    def multiplicative_order(self) -> int:
        return self.fraction.denominator

    def as_sympy(self) -> sympy.Expr:
        """Exact symbolic value, e.g. -1 or exp(2*I*pi/3)."""
        return sympy.exp(2 * sympy.pi * sympy.I * sympy.Rational(self.exponent, self.order))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        return self.fraction == other.fraction

    def __hash__(self) -> int:
        return hash(self.fraction)

    def __str__(self) -> str:
        if self.is_one:
            return "1"
        if self.is_minus_one:
            return "-1"
        f = self.fraction
        return f"e^(2πi·{f.numerator}/{f.denominator})"

    def __repr__(self) -> str:
        return f"RootOfUnity({self.order}, {self.exponent})"


@dataclass(frozen=True)
class Cocycle:
    """
    Root-of-unity valued function on rack pairs, all with the shared order L.

    exponents[i][j] is the exponent of q_{ij} in Z/L.
    """

    rack: RackTable
    order: int
    exponents: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.order < 1:
            raise InputError(f"Cocycle order must be positive, got {self.order}")
        exps = tuple(tuple(int(x) % self.order for x in row) for row in self.exponents)
        n = self.rack.size
        if len(exps) != n or any(len(row) != n for row in exps):
            raise InputError(f"Cocycle needs a {n}x{n} exponent table")
        object.__setattr__(self, "exponents", exps)

    @property
    def size(self) -> int:
        return self.rack.size

    def q(self, i: int, j: int) -> RootOfUnity:
        return RootOfUnity(self.order, self.exponents[i][j])

    @classmethod
    def from_values(cls, rack: RackTable, values: Sequence[Sequence[RootOfUnity]]) -> "Cocycle":
        """Build from RootOfUnity entries, lifting to the lcm of their orders."""
        order = 1
        for row in values:
            for value in row:
                order = order * value.order // gcd(order, value.order)
        exps = tuple(tuple(value.lift(order).exponent for value in row) for row in values)
        return cls(rack=rack, order=order, exponents=exps)

    def is_constant(self, value: Optional[RootOfUnity] = None) -> bool:
        first = self.q(0, 0)
        if value is not None and first != value:
            return False
        return all(self.q(i, j) == first for i in range(self.size) for j in range(self.size))

    def to_json(self) -> Dict[str, Any]:
        return {
            "rack": self.rack.to_json(),
            "L": self.order,
            "exponents": [list(row) for row in self.exponents],
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "Cocycle":
        try:
            return cls(
                rack=RackTable.from_json(data["rack"]),
                order=int(data["L"]),
                exponents=tuple(tuple(row) for row in data["exponents"]),
            )
        except (KeyError, TypeError) as e:
            raise InputError(f"Malformed cocycle JSON: {e}") from None


@dataclass(frozen=True)
class CosetSection(Generic[E]):
    """Class elements t_1..t_M with transporters g_i ▷ s = t_i; t_1 = s."""
    base: E
    elements: Tuple[E, ...]
    transporters: Tuple[E, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "transporters", tuple(self.transporters))
        if len(self.elements) != len(self.transporters):
            raise InputError(
                f"{len(self.elements)} class elements but {len(self.transporters)} transporters"
            )
        if not self.elements or self.elements[0] != self.base:
            raise InputError("The first class element must be the base point")

    @property
    def size(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class Character(Generic[E]):
    """
    Degree-1 character of a centralizer, given on generators.

    q_ss is χ(s); leave it None to have it evaluated from the generators.
    """

    generators: Tuple[E, ...]
    values: Tuple[RootOfUnity, ...]
    q_ss: Optional[RootOfUnity] = None
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.generators) != len(self.values):
            raise InputError("Each character generator needs exactly one value")

    @property
    def is_trivial(self) -> bool:
        return all(v.is_one for v in self.values)

    def assignments(self) -> List[Tuple[E, RootOfUnity]]:
        return list(zip(self.generators, self.values))

    def check_orders(self, group: Any) -> bool:
        """χ(gen)^{|gen|} = 1 for every generator."""
        return all((value ** group.order(gen)).is_one for gen, value in self.assignments())
