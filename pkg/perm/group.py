"""Symmetric group S_m as a BaseGroup."""

from typing import Any, Optional

from rackit.errors import InputError
from rackit.groups.base import BaseGroup
from rackit.perm import ops
from rackit.perm.types import Permutation


class SymmetricGroup(BaseGroup[Permutation]):
    """
    S_m acting on {1..m}.

    Usage:
        group = SymmetricGroup(8)
        sigma = group.parse("(1 2 3 4 5 6 7 8)")
        group.power(sigma, 3)
    """

    def __init__(self, degree: int):
        if degree < 1:
            raise InputError(f"Degree must be positive, got {degree}")
        self.degree = degree
        self._identity = Permutation.identity(degree)

    @property
    def spec(self) -> str:
        return f"sym:{self.degree}"

    @property
    def identity(self) -> Permutation:
        return self._identity

    def mul(self, a: Permutation, b: Permutation) -> Permutation:
        return a * b

    def inv(self, a: Permutation) -> Permutation:
        return a.inverse()

    def order(self, a: Permutation) -> int:
        return ops.order(a)

    def contains(self, a: Any) -> bool:
        return isinstance(a, Permutation) and a.degree == self.degree

    def conjugate(self, a: Permutation, b: Permutation) -> Permutation:
        return ops.conjugate(a, b)

    def power(self, a: Permutation, k: int) -> Permutation:
        return ops.power(a, k)

    def find_conjugator(self, a: Permutation, b: Permutation) -> Optional[Permutation]:
        return ops.relabel_conjugator(a, b)

    def parse(self, text: str) -> Permutation:
        return ops.parse_permutation(text, self.degree)

    def element_to_json(self, a: Permutation) -> Any:
        return list(a.images)

    def element_from_json(self, data: Any) -> Permutation:
        if isinstance(data, str):
            return self.parse(data)
        element = Permutation(tuple(int(x) for x in data))
        if element.degree != self.degree:
            raise InputError(f"Expected degree {self.degree}, got {element.degree}")
        return element
