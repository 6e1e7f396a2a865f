"""Type-D_3 families in GL(2, p) and GL(N, p), and the determinant criterion."""

import logging
from typing import List, Optional, Sequence, Tuple

from sympy import isprime

from rackit.dtype.types import Dp2Family, DpFamily
from rackit.dtype.verify import verify_dp, verify_dp2_members
from rackit.errors import DefectError, InputError
from rackit.matgrp import ops
from rackit.matgrp.group import GeneralLinearGroup
from rackit.matgrp.types import GLCriterionReport, PrimeFieldMatrix

logger = logging.getLogger(__name__)


def _check_omega(p: int, omega: int) -> int:
    if not isprime(p):
        raise InputError(f"{p} is not prime")
    omega %= p
    if omega == 1 or pow(omega, 3, p) != 1:
        raise InputError(f"{omega} is not a primitive cube root of unity mod {p}")
    return omega


def _mu(p: int, omega: int, c: int, i: int) -> PrimeFieldMatrix:
    return PrimeFieldMatrix(p, ((0, pow(omega, i, p)), (pow(omega, 2 * i, p) * c, 0)))


def gl2_d3_family(p: int, omega: int, c: int) -> DpFamily[PrimeFieldMatrix]:
    """
    μ_i = [[0, ω^i], [ω^{2i}c, 0]] for i = 0, 1, 2.

    Every μ_i squares to c·Id; for c = −1 the family lies in SL(2, p).

    Raises:
        InputError: If ω is not a primitive cube root of unity or c = 0.
        DefectError: If the family fails verification.
    """
    omega = _check_omega(p, omega)
    c %= p
    if c == 0:
        raise InputError("c must be nonzero")
    group = GeneralLinearGroup(2, p)
    check = verify_dp(group, [_mu(p, omega, c, i) for i in range(3)], 3)
    if not check.ok:
        raise DefectError("gl2-triple", check.diagnosis.reason)
    logger.debug(f"GL(2, {p}) triple verified for ω={omega}, c={c}")
    return check.family


def normalize_diagonal(p: int, diagonal: Sequence[int]) -> Tuple[int, ...]:
    """
    Reorder λ so that λ_1 = −λ_2 and λ_3 ≠ λ_4.

    The first pair (i < j) with λ_i = −λ_j whose complement holds two
    different values is moved to the front; a value differing from the
    new λ_3 is then swapped into position 4.

    Raises:
        InputError: If N ≤ 3 or no such arrangement exists.
    """
    lam = [int(x) % p for x in diagonal]
    n = len(lam)
    if n <= 3:
        raise InputError(f"Need N > 3, got N = {n}")
    if 0 in lam:
        raise InputError(f"Diagonal {tuple(lam)} is singular mod {p}")
    for i in range(n):
        for j in range(i + 1, n):
            if (lam[i] + lam[j]) % p:
                continue
            rest = [x for k, x in enumerate(lam) if k not in (i, j)]
            for k in range(1, len(rest)):
                if rest[k] != rest[0]:
                    rest[1], rest[k] = rest[k], rest[1]
                    return tuple([lam[i], lam[j]] + rest)
    raise InputError(f"Diagonal {tuple(lam)} has no pair λ_1 = −λ_2 with a non-scalar complement")


def gln_d3sq_family(p: int, omega: int, lam: Sequence[int]) -> Dp2Family[PrimeFieldMatrix]:
    """
    σ_i = μ_i ⊕ diag(λ_3, λ_4, ...), τ_i = μ_i ⊕ diag(λ_4, λ_3, ...), with c = λ_1².

    The transporter g_∞ swaps coordinates 3 and 4; it is an involution
    with g_∞ ▷ σ_0 = τ_0.

    Args:
        p: Prime with 3 | p − 1.
        omega: Primitive cube root of unity mod p.
        lam: Diagonal of length N > 3 with λ_1 = −λ_2. If λ_3 = λ_4 a
            later differing entry is swapped into position 4.

    Raises:
        InputError: On any hypothesis violation.
        DefectError: If the sextuple fails verification.
    """
    omega = _check_omega(p, omega)
    lam = [int(x) % p for x in lam]
    n = len(lam)
    if n <= 3:
        raise InputError(f"Need N > 3, got N = {n}")
    if 0 in lam:
        raise InputError(f"Diagonal {tuple(lam)} is singular mod {p}")
    if (lam[0] + lam[1]) % p:
        raise InputError(f"Need λ_1 = −λ_2, got {lam[0]} and {lam[1]}")
    if lam[2] == lam[3]:
        swap = next((k for k in range(4, n) if lam[k] != lam[2]), None)
        if swap is None:
            raise InputError(f"λ_3, ..., λ_N are all equal to {lam[2]}")
        lam[3], lam[swap] = lam[swap], lam[3]
    c = lam[0] * lam[0] % p
    tail_sigma = ops.diagonal_matrix(p, lam[2:])
    tail_tau = ops.diagonal_matrix(p, [lam[3], lam[2]] + lam[4:])
    blocks = [_mu(p, omega, c, i) for i in range(3)]
    sigmas = [ops.block_diagonal(b, tail_sigma) for b in blocks]
    taus = [ops.block_diagonal(b, tail_tau) for b in blocks]
    g_inf = swap_matrix(p, n, 2, 3)

    group = GeneralLinearGroup(n, p)
    check = verify_dp2_members(group, sigmas, taus, 3, g_inf)
    if not check.ok:
        raise DefectError("gln-sextuple", check.diagnosis.reason)
    if group.mul(g_inf, g_inf) != group.identity:
        raise DefectError("gln-sextuple", "g_∞ is not an involution")
    logger.debug(f"GL({n}, {p}) sextuple verified for λ={tuple(lam)}")
    return check.family


def swap_matrix(p: int, n: int, i: int, j: int) -> PrimeFieldMatrix:
    """Permutation matrix of the transposition of 0-based coordinates i, j."""
    perm = list(range(n))
    perm[i], perm[j] = perm[j], perm[i]
    return PrimeFieldMatrix(p, tuple(tuple(int(perm[r] == col) for col in range(n)) for r in range(n)))


def gln_r2_criterion(
    p: int,
    diagonal: Sequence[int],
    h: int = 1,
    generator: Optional[int] = None,
) -> Tuple[GLCriterionReport, Dp2Family[PrimeFieldMatrix]]:
    """
    Evaluate χ(λ) = φ(det λ^h) for the class of λ and build its sextuple.

    Returns:
        The report (hypotheses, determinant, exact exponent of χ(λ), all
        twists h' with χ_{h'}(λ) = −1) and the verified D_3^(2) family.

    Raises:
        InputError: If p = 2, 3 ∤ p − 1, or λ admits no normalization.
    """
    if p == 2:
        raise InputError("GF(2)^× is trivial; no character takes the value -1")
    omega = ops.primitive_cube_root(p)
    lam = normalize_diagonal(p, diagonal)
    chi = ops.det_character(p, h=h, generator=generator or 0)
    fam = gln_d3sq_family(p, omega, lam)
    lam_matrix = ops.diagonal_matrix(p, lam)
    exponent = ops.det_char_value(chi, lam_matrix)
    det = ops.mat_det(lam_matrix)
    d = ops.dlog_table(p, chi.generator)[det]
    half = (p - 1) // 2
    twists: List[int] = [t for t in range(p - 1) if t * d % (p - 1) == half]
    report = GLCriterionReport(
        p=p,
        diagonal=lam,
        generator=chi.generator,
        h=h,
        determinant=det,
        chi_exponent=exponent,
        chi_is_minus_one=exponent == half,
        twists_with_minus_one=twists,
        omega=omega,
        hypotheses={
            "3 | p-1": True,
            "N > 3": True,
            "λ_1 = -λ_2": True,
            "λ_3 != λ_4": True,
            "χ(λ) = -1": exponent == half,
        },
    )
    logger.info(f"GL({len(lam)}, {p}) λ={lam}: χ exponent {exponent} of {p - 1}")
    return report, fam
