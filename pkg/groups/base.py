"""Base group abstract class.

Defines the interface every concrete group must follow. The rack,
braided, family and criteria modules are written against this interface
only, so permutations and prime-field matrices go through the same code.
"""

from abc import ABC, abstractmethod
from typing import Any, Generic, Iterable, List, Optional, TypeVar

E = TypeVar("E")


class BaseGroup(ABC, Generic[E]):
    """
    Abstract base class for finite group implementations.

    Elements are immutable, hashable values; equality is value equality.

    Usage:
        group = SymmetricGroup(6)
        s = group.parse("(1 2 3 4 5 6)")
        t = group.conjugate(s, group.parse("(1 2)"))
    """

    # === Group Structure ===

    @property
    @abstractmethod
    def spec(self) -> str:
        """Short group descriptor, e.g. "sym:8" or "gl:4:7"."""
        pass

    @property
    @abstractmethod
    def identity(self) -> E:
        """Neutral element."""
        pass

    @abstractmethod
    def mul(self, a: E, b: E) -> E:
        """Product a·b (b acts first when elements are maps)."""
        pass

    @abstractmethod
    def inv(self, a: E) -> E:
        """Inverse of a."""
        pass

    @abstractmethod
    def order(self, a: E) -> int:
        """Multiplicative order of a."""
        pass

    @abstractmethod
    def contains(self, a: Any) -> bool:
        """Check that a is an element of this group."""
        pass

    # === Serialization ===

    @abstractmethod
    def element_to_json(self, a: E) -> Any:
        """Encode an element as a JSON value."""
        pass

    @abstractmethod
    def element_from_json(self, data: Any) -> E:
        """Decode an element from its JSON value."""
        pass

    def format(self, a: E) -> str:
        """Human-readable element."""
        return str(a)

    # === Derived Operations ===

    def prod(self, elements: Iterable[E]) -> E:
        """Left-to-right product of a sequence of elements."""
        result = self.identity
        for element in elements:
            result = self.mul(result, element)
        return result

    def conjugate(self, a: E, b: E) -> E:
        """Rack product a ▷ b = a·b·a⁻¹."""
        return self.mul(self.mul(a, b), self.inv(a))

    def power(self, a: E, k: int) -> E:
        """
        k-th power of a for any integer k.

        Args:
            a: Group element.
            k: Exponent, reduced modulo the order of a.

        Returns:
            a^k.
        """
        k %= self.order(a)
        result = self.identity
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def commutes(self, a: E, b: E) -> bool:
        """Check a·b = b·a."""
        return self.mul(a, b) == self.mul(b, a)

    def is_conjugate_pair(self, g: E, a: E, b: E) -> bool:
        """Check g ▷ a = b."""
        return self.conjugate(g, a) == b

    def find_conjugator(self, a: E, b: E) -> Optional[E]:
        """
        Find g with g ▷ a = b.

        Returns:
            A conjugator, or None when a and b are not conjugate.

        Raises:
            NotImplementedError: If the group has no conjugator search.
        """
        raise NotImplementedError(f"{self.spec} has no conjugator search")

    def powers(self, a: E) -> List[E]:
        """The cyclic subgroup generated by a, as [a^0, a^1, ...]."""
        out = [self.identity]
        current = a
        while current != self.identity:
            out.append(current)
            current = self.mul(current, a)
        return out
