"""General linear group GL(n, p) as a BaseGroup."""

import itertools
import logging
from collections import Counter
from math import lcm, prod
from typing import Any, Optional, Sequence

from sympy import isprime, n_order

from rackit.errors import BudgetExceeded, InputError
from rackit.groups.base import BaseGroup
from rackit.matgrp import ops
from rackit.matgrp.types import DiagonalClassData, PrimeFieldMatrix

logger = logging.getLogger(__name__)

# Conjugator search enumerates all n×n matrices up to this many.
ENUMERATION_LIMIT = 100_000


class GeneralLinearGroup(BaseGroup[PrimeFieldMatrix]):
    """
    GL(n, F_p).

    Usage:
        group = GeneralLinearGroup(2, 7)
        a = group.element_from_json({"p": 7, "n": 2, "rows": [[0, 1], [6, 0]]})
        group.order(a)  # 4
    """

    def __init__(self, n: int, p: int):
        if n < 1:
            raise InputError(f"Dimension must be positive, got {n}")
        if not isprime(p):
            raise InputError(f"{p} is not prime")
        self.n = n
        self.p = p
        self._identity = ops.identity_matrix(p, n)

    @property
    def spec(self) -> str:
        return f"gl:{self.n}:{self.p}"

    @property
    def identity(self) -> PrimeFieldMatrix:
        return self._identity

    def mul(self, a: PrimeFieldMatrix, b: PrimeFieldMatrix) -> PrimeFieldMatrix:
        return ops.mat_mul(a, b)

    def inv(self, a: PrimeFieldMatrix) -> PrimeFieldMatrix:
        return ops.mat_inv(a)

    def order(self, a: PrimeFieldMatrix) -> int:
        k, current = 1, a
        while current != self._identity:
            current = ops.mat_mul(current, a)
            k += 1
        return k

    def power(self, a: PrimeFieldMatrix, k: int) -> PrimeFieldMatrix:
        return ops.mat_pow(a, k)

    def contains(self, a: Any) -> bool:
        return (
            isinstance(a, PrimeFieldMatrix)
            and a.p == self.p
            and a.n == self.n
            and ops.is_invertible(a)
        )

    def find_conjugator(self, a: PrimeFieldMatrix, b: PrimeFieldMatrix) -> Optional[PrimeFieldMatrix]:
        """
        First invertible g (row-major order of entries) with g·a = b·g.

        Raises:
            BudgetExceeded: If p^(n²) exceeds the enumeration limit.
        """
        total = self.p ** (self.n * self.n)
        if total > ENUMERATION_LIMIT:
            raise BudgetExceeded(
                f"Conjugator search in {self.spec} needs {total} candidates", ENUMERATION_LIMIT
            )
        n = self.n
        for flat in itertools.product(range(self.p), repeat=n * n):
            g = PrimeFieldMatrix(self.p, tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))
            if ops.mat_mul(g, a) == ops.mat_mul(b, g) and ops.is_invertible(g):
                return g
        return None

    def element_to_json(self, a: PrimeFieldMatrix) -> Any:
        return a.to_json()

    def element_from_json(self, data: Any) -> PrimeFieldMatrix:
        a = PrimeFieldMatrix.from_json(data)
        if not self.contains(a):
            raise InputError(f"{a} is not an element of {self.spec}")
        return a

    def group_order(self) -> int:
        return gl_order(self.n, self.p)


def gl_order(n: int, p: int) -> int:
    """|GL(n, p)| = ∏_{i<n} (p^n − p^i)."""
    return prod(p**n - p**i for i in range(n))


def diagonal_class_data(p: int, diagonal: Sequence[int]) -> DiagonalClassData:
    """
    Class data of diag(λ_1, ..., λ_N) in GL(N, p).

    The centralizer of a diagonalizable matrix is ∏ GL(m_k) over the
    eigenvalue multiplicities m_k.

    Raises:
        InputError: If p is not prime or some λ_i is zero mod p.
    """
    if not isprime(p):
        raise InputError(f"{p} is not prime")
    values = tuple(int(x) % p for x in diagonal)
    if not values:
        raise InputError("Empty diagonal")
    if 0 in values:
        raise InputError(f"Diagonal {values} is singular mod {p}")
    counts = Counter(values)
    size = gl_order(len(values), p) // prod(gl_order(m, p) for m in counts.values())
    element_order = lcm(*(int(n_order(x, p)) for x in values))
    is_real = all(counts[x] == counts[pow(x, -1, p)] for x in counts)
    return DiagonalClassData(p=p, diagonal=values, size=size, element_order=element_order, is_real=is_real)
