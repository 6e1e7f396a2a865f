"""Dihedral groups of order 2n.

Elements are r^k·x^s with r a rotation of order n and x a reflection,
x·r·x⁻¹ = r⁻¹.
"""

from dataclasses import dataclass
from typing import Any

from rackit.errors import InputError
from rackit.groups.base import BaseGroup


@dataclass(frozen=True)
class DihedralElement:
    """r^rotation · x^reflection."""
    rotation: int
    reflection: int

    def __str__(self) -> str:
        if self.reflection:
            return f"r^{self.rotation}x"
        return f"r^{self.rotation}"


class DihedralGroup(BaseGroup[DihedralElement]):
    """Dihedral group of order 2n."""

    def __init__(self, n: int):
        if n < 1:
            raise InputError(f"Dihedral group needs n >= 1, got {n}")
        self.n = n

    @property
    def spec(self) -> str:
        return f"dih:{self.n}"

    @property
    def identity(self) -> DihedralElement:
        return DihedralElement(0, 0)

    @property
    def x(self) -> DihedralElement:
        """The reflection generator."""
        return DihedralElement(0, 1)

    @property
    def y(self) -> DihedralElement:
        """The rotation generator."""
        return DihedralElement(1 % self.n, 0)

    def mul(self, a: DihedralElement, b: DihedralElement) -> DihedralElement:
        sign = -1 if a.reflection else 1
        return DihedralElement(
            (a.rotation + sign * b.rotation) % self.n,
            (a.reflection + b.reflection) % 2,
        )

    def inv(self, a: DihedralElement) -> DihedralElement:
        if a.reflection:
            return a
        return DihedralElement((-a.rotation) % self.n, 0)

    def order(self, a: DihedralElement) -> int:
        if a.reflection:
            return 2
        k = 1
        current = a
        while current != self.identity:
            current = self.mul(current, a)
            k += 1
        return k

    def contains(self, a: Any) -> bool:
        return (
            isinstance(a, DihedralElement)
            and 0 <= a.rotation < self.n
            and a.reflection in (0, 1)
        )

    def element_to_json(self, a: DihedralElement) -> Any:
        return [a.rotation, a.reflection]

    def element_from_json(self, data: Any) -> DihedralElement:
        element = DihedralElement(int(data[0]), int(data[1]))
        if not self.contains(element):
            raise InputError(f"Not an element of {self.spec}: {data}")
        return element
