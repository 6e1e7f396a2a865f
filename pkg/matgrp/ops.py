"""Exact matrix arithmetic over GF(p) through galois field arrays."""

import logging
from functools import lru_cache
from typing import Dict, Sequence

import galois
import numpy as np
from sympy import is_primitive_root, isprime, primitive_root

from rackit.errors import InputError
from rackit.matgrp.types import DetCharacter, PrimeFieldMatrix

logger = logging.getLogger(__name__)

DLOG_TABLE_LIMIT = 10_000


@lru_cache(maxsize=None)
def field(p: int) -> type:
    """galois.GF(p), cached per prime."""
    if not isprime(p):
        raise InputError(f"{p} is not prime")
    return galois.GF(p)


def to_array(a: PrimeFieldMatrix) -> galois.FieldArray:
    return field(a.p)(np.array(a.rows, dtype=int))


def from_array(p: int, arr: galois.FieldArray) -> PrimeFieldMatrix:
    return PrimeFieldMatrix(p, tuple(tuple(int(x) for x in row) for row in np.asarray(arr)))


def _same_shape(a: PrimeFieldMatrix, b: PrimeFieldMatrix) -> None:
    if a.p != b.p:
        raise InputError(f"Modulus mismatch: {a.p} vs {b.p}")
    if a.n != b.n:
        raise InputError(f"Dimension mismatch: {a.n} vs {b.n}")


def identity_matrix(p: int, n: int) -> PrimeFieldMatrix:
    return PrimeFieldMatrix(p, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def diagonal_matrix(p: int, values: Sequence[int]) -> PrimeFieldMatrix:
    n = len(values)
    return PrimeFieldMatrix(p, tuple(tuple(values[i] if i == j else 0 for j in range(n)) for i in range(n)))


def block_diagonal(first: PrimeFieldMatrix, second: PrimeFieldMatrix) -> PrimeFieldMatrix:
    """first ⊕ second."""
    if first.p != second.p:
        raise InputError(f"Modulus mismatch: {first.p} vs {second.p}")
    n1, n2 = first.n, second.n
    rows = [list(row) + [0] * n2 for row in first.rows]
    rows += [[0] * n1 + list(row) for row in second.rows]
    return PrimeFieldMatrix(first.p, tuple(tuple(row) for row in rows))


def mat_mul(a: PrimeFieldMatrix, b: PrimeFieldMatrix) -> PrimeFieldMatrix:
    """
    a·b over GF(p).

    Raises:
        InputError: On modulus or dimension mismatch.
    """
    _same_shape(a, b)
    return from_array(a.p, to_array(a) @ to_array(b))


def mat_det(a: PrimeFieldMatrix) -> int:
    return int(np.linalg.det(to_array(a)))


def mat_inv(a: PrimeFieldMatrix) -> PrimeFieldMatrix:
    """
    a⁻¹ over GF(p).

    Raises:
        InputError: If a is singular.
    """
    try:
        return from_array(a.p, np.linalg.inv(to_array(a)))
    except np.linalg.LinAlgError:
        raise InputError(f"Matrix {a} is singular mod {a.p}") from None


def mat_pow(a: PrimeFieldMatrix, k: int) -> PrimeFieldMatrix:
    """a^k for any integer k; negative k requires a invertible."""
    if k < 0:
        return mat_pow(mat_inv(a), -k)
    result = identity_matrix(a.p, a.n)
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


# === Determinant character ===

@lru_cache(maxsize=None)
def dlog_table(p: int, generator: int) -> Dict[int, int]:
    """
    x -> dlog_γ(x) on GF(p)^×.

    Raises:
        InputError: If p exceeds the table limit or γ is not a generator.
    """
    if p > DLOG_TABLE_LIMIT:
        raise InputError(f"Discrete-log tables are limited to p <= {DLOG_TABLE_LIMIT}")
    if not is_primitive_root(generator, p):
        raise InputError(f"{generator} does not generate GF({p})^×")
    table = {}
    x = 1
    for e in range(p - 1):
        table[x] = e
        x = x * generator % p
    return table


def det_character(p: int, h: int = 0, generator: int = 0) -> DetCharacter:
    """DetCharacter with γ defaulting to the least primitive root mod p."""
    gamma = generator or int(primitive_root(p))
    dlog_table(p, gamma)
    return DetCharacter(p=p, generator=gamma, h=h)


def det_char_value(chi: DetCharacter, a: PrimeFieldMatrix) -> int:
    """
    Exponent h·dlog_γ(det a) of χ(a) in Z/(p-1).

    The value is -1 exactly when the exponent is (p-1)/2.

    Raises:
        InputError: If p = 2, moduli differ, or a is singular.
    """
    if chi.p == 2:
        raise InputError("GF(2)^× is trivial; no character takes the value -1")
    if a.p != chi.p:
        raise InputError(f"Modulus mismatch: {a.p} vs {chi.p}")
    det = mat_det(a)
    if det == 0:
        raise InputError(f"Matrix {a} is singular mod {a.p}")
    return chi.h * dlog_table(chi.p, chi.generator)[det] % (chi.p - 1)


def primitive_cube_root(p: int) -> int:
    """
    Least primitive cube root of unity in GF(p).

    Raises:
        InputError: If 3 does not divide p - 1.
    """
    if (p - 1) % 3:
        raise InputError(f"GF({p}) has no primitive cube root of unity")
    return min(w for w in range(2, p) if pow(w, 3, p) == 1)


def is_invertible(a: PrimeFieldMatrix) -> bool:
    return mat_det(a) != 0


def mat_rank(a: PrimeFieldMatrix) -> int:
    return int(np.linalg.matrix_rank(to_array(a)))


def in_diagonal_class(a: PrimeFieldMatrix, diagonal: Sequence[int]) -> bool:
    """a is conjugate to diag(diagonal): rank(a − λ) = n − mult(λ) for each eigenvalue λ."""
    values = [int(x) % a.p for x in diagonal]
    if len(values) != a.n:
        return False
    for lam in set(values):
        shifted = PrimeFieldMatrix(
            a.p, tuple(tuple((x - lam) if r == c else x for c, x in enumerate(row)) for r, row in enumerate(a.rows))
        )
        if mat_rank(shifted) != a.n - values.count(lam):
            return False
    return True
