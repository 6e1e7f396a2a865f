"""Permutation data types.

Permutations of {1..m} stored as 1-indexed image tuples and backed by
sympy's Permutation for arithmetic. Products apply the right factor
first: (a * b)(x) = a(b(x)); sympy multiplies left to right, so a * b
here is b * a there.
"""

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterator, List, Tuple

from sympy.combinatorics import Permutation as SymPermutation

from rackit.errors import InputError


@dataclass(frozen=True)
class Permutation:
    """
    Element of S_m.

    images[x - 1] is the image of x. Equality and hashing use images;
    the sympy permutation is built on first use.

    Usage:
        a = Permutation.from_cycles(4, [(1, 2, 3, 4)])
        b = a * a          # (1 3)(2 4)
        a(4)               # 1
    """

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InputError(f"Not a bijection of 1..{len(images)}: {images}")

    @classmethod
    def _trusted(cls, images: Tuple[int, ...]) -> "Permutation":
        """Build from an image tuple already known to be a bijection."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "images", images)
        return obj

    @classmethod
    def from_sympy(cls, perm: SymPermutation) -> "Permutation":
        obj = cls._trusted(tuple(x + 1 for x in perm.array_form))
        obj.__dict__["sym"] = perm
        return obj

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise InputError(f"Degree must be positive, got {degree}")
        return cls._trusted(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: List[Tuple[int, ...]]) -> "Permutation":
        """
        Build a permutation from disjoint cycles.

        Args:
            degree: m.
            cycles: Cycles as tuples of points in 1..m.

        Raises:
            InputError: If points repeat or fall outside 1..m.
        """
        seen = set()
        for cycle in cycles:
            for point in cycle:
                if not 1 <= point <= degree:
                    raise InputError(f"Point {point} outside 1..{degree}")
                if point in seen:
                    raise InputError(f"Point {point} appears twice in {cycles}")
                seen.add(point)
        zero_based = [[x - 1 for x in cycle] for cycle in cycles if len(cycle) > 1]
        return cls.from_sympy(SymPermutation(zero_based, size=degree))

    @cached_property
    def sym(self) -> SymPermutation:
        return SymPermutation([x - 1 for x in self.images])

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise InputError(f"Degree mismatch: {self.degree} vs {other.degree}")
        return Permutation.from_sympy(other.sym * self.sym)

    def __pow__(self, k: int) -> "Permutation":
        return Permutation.from_sympy(self.sym ** k)

    def inverse(self) -> "Permutation":
        return Permutation.from_sympy(~self.sym)

    def conjugate(self, b: "Permutation") -> "Permutation":
        """self ▷ b = self·b·self⁻¹ (sympy's b ^ self)."""
        if self.degree != b.degree:
            raise InputError(f"Degree mismatch: {self.degree} vs {b.degree}")
        return Permutation.from_sympy(b.sym ^ self.sym)

    def order(self) -> int:
        return int(self.sym.order())

    def cycle_structure(self) -> Dict[int, int]:
        """Cycle length -> count, fixed points included."""
        return dict(self.sym.cycle_structure)

    def cycles(self, include_fixed: bool = False) -> List[Tuple[int, ...]]:
        """
        Disjoint cycles in canonical order.

        Each cycle starts at its minimal point; cycles are sorted by that point.
        """
        form = self.sym.full_cyclic_form if include_fixed else self.sym.cyclic_form
        return [tuple(x + 1 for x in cycle) for cycle in form]

    def is_identity(self) -> bool:
        return self.sym.is_Identity

    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(x + 1 for x in self.sym.support()))

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({self.degree}, {self})"


@dataclass(frozen=True)
class CycleType:
    """
    Cycle type (1^{n_1}, 2^{n_2}, ..., m^{n_m}).

    multiplicities holds the nonzero (j, n_j) pairs in increasing j.
    """

    degree: int
    multiplicities: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted((int(j), int(n)) for j, n in self.multiplicities if n))
        object.__setattr__(self, "multiplicities", pairs)
        for j, n in pairs:
            if j < 1 or n < 0:
                raise InputError(f"Invalid part {j}^{n}")
        total = sum(j * n for j, n in pairs)
        if total != self.degree:
            raise InputError(f"Parts sum to {total}, expected degree {self.degree}")

    @classmethod
    def from_parts(cls, parts: List[int], degree: int = 0) -> "CycleType":
        counts: Dict[int, int] = {}
        for j in parts:
            counts[j] = counts.get(j, 0) + 1
        return cls(degree or sum(parts), tuple(counts.items()))

    def n(self, j: int) -> int:
        """Multiplicity n_j."""
        return dict(self.multiplicities).get(j, 0)

    def parts(self) -> List[int]:
        """Cycle lengths in weakly increasing order, fixed points included."""
        return [j for j, n in self.multiplicities for _ in range(n)]

    def lengths(self) -> Iterator[int]:
        return (j for j, _ in self.multiplicities)

    @property
    def order(self) -> int:
        return math.lcm(*self.lengths()) if self.multiplicities else 1

    def __str__(self) -> str:
        tokens = []
        for j, n in reversed(self.multiplicities):
            tokens.append(str(j) if n == 1 else f"{j}^{n}")
        return ",".join(tokens)


@dataclass(frozen=True)
class ClassData:
    """Conjugacy class of S_m described by its cycle type."""
    representative: Permutation
    cycle_type: CycleType
    size: int
    element_order: int
    is_real: bool = True

    @property
    def degree(self) -> int:
        return self.cycle_type.degree

    @property
    def group_spec(self) -> str:
        return f"sym:{self.degree}"

    @property
    def label(self) -> str:
        return str(self.cycle_type)
