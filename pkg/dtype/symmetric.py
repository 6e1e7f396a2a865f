"""Symmetric-group constructions of D_3, D_p and D_p^(2) families.

Each construction picks its cycles in canonical order (cycles sorted by
minimal point, each written from its minimal point), builds the family
and accepts it only through the verifiers.
"""

import logging
from typing import List, Sequence, Tuple

from sympy import isprime

from rackit.dtype.families import require
from rackit.dtype.types import Dp2Family, DpFamily
from rackit.dtype.verify import verify_dp, verify_dp2_members
from rackit.errors import DefectError, InputError
from rackit.perm import ops
from rackit.perm.group import SymmetricGroup
from rackit.perm.types import Permutation

logger = logging.getLogger(__name__)

# Transposition words on the points i_1..i_12 of six 2-cycles.
SIX_TRANSPOSITION_WORDS = {
    "plain": {
        "sigma2": ((1, 6), (3, 8), (5, 10), (7, 12), (9, 2), (11, 4)),
        "sigma3": ((1, 10), (3, 12), (5, 2), (7, 4), (9, 6), (11, 8)),
        "tau1": ((1, 4), (3, 2), (5, 8), (7, 6), (9, 12), (11, 10)),
        "tau2": ((1, 8), (3, 6), (5, 12), (7, 10), (9, 4), (11, 2)),
        "tau3": ((1, 12), (3, 10), (5, 4), (7, 2), (9, 8), (11, 6)),
        "g": ((2, 4), (6, 8), (10, 12)),
    },
    "bar": {
        "sigma2": ((1, 6), (4, 7), (5, 10), (8, 11), (2, 9), (3, 12)),
        "sigma3": ((1, 10), (4, 11), (2, 5), (3, 8), (6, 9), (7, 12)),
        "tau1": ((1, 3), (2, 4), (5, 7), (6, 8), (9, 11), (10, 12)),
        "tau2": ((1, 7), (2, 12), (3, 9), (4, 6), (5, 11), (8, 10)),
        "tau3": ((1, 11), (2, 8), (3, 5), (4, 10), (6, 12), (7, 9)),
        "g": ((2, 3), (6, 7), (10, 11)),
    },
}

_B_WORD = ((1, 3), (2, 4), (5, 7), (6, 8), (9, 11), (10, 12))


def word(degree: int, points: Sequence[int], cycles: Sequence[Sequence[int]]) -> Permutation:
    """Permutation whose cycles are given by 1-based positions into points."""
    return Permutation.from_cycles(degree, [tuple(points[k - 1] for k in cycle) for cycle in cycles])


def _require_cycles(sigma: Permutation, length: int, count: int) -> List[tuple]:
    found = ops.cycles_of_length(sigma, length)
    if len(found) < count:
        raise InputError(f"Need {count} cycle(s) of length {length} in {sigma}, found {len(found)}")
    return found[:count]


def _assert(condition: bool, tag: str, message: str) -> None:
    if not condition:
        logger.error(f"{tag}: {message}")
        raise DefectError(tag, message)


# === Lemma: j-cycle split ===

def sym_dp2_split(sigma: Permutation, j: int, p: int) -> Dp2Family[Permutation]:
    """
    D_p^(2) family (σ_i) ∪ (σ_i⁻¹) from a j-cycle of σ with 2p | j.

    With α = (i_1 ... i_j) the first j-cycle, P = (i_2 i_4 ... i_j) and
    κ = j/(2p), σ_i = P^{iκ} σ P^{-iκ}. The transporter g_∞ sends σ to σ⁻¹.

    Raises:
        InputError: If j = 4, 2p does not divide j, p < 2, or σ has no j-cycle.
        DefectError: If the family or the helper identities fail.
    """
    if p < 2:
        raise InputError(f"p must be at least 2, got {p}")
    if j == 4:
        raise InputError("The split construction excludes j = 4")
    if j % (2 * p):
        raise InputError(f"2p = {2 * p} does not divide j = {j}")
    m = sigma.degree
    group = SymmetricGroup(m)
    (alpha,) = _require_cycles(sigma, j, 1)
    odd = Permutation.from_cycles(m, [alpha[0::2]])
    even = Permutation.from_cycles(m, [alpha[1::2]])
    alpha_perm = Permutation.from_cycles(m, [alpha])
    _assert(ops.power(alpha_perm, 2) == odd * even, "split-helper", "α² != IP")
    _assert(ops.conjugate(sigma, odd) == even, "split-helper", "σ I σ⁻¹ != P")
    kappa = j // (2 * p)
    sigmas = [ops.conjugate(ops.power(even, i * kappa), sigma) for i in range(p)]
    inverses = [s.inverse() for s in sigmas]
    g_inf = ops.relabel_conjugator(sigma, sigma.inverse())
    fam = require(verify_dp2_members(group, sigmas, inverses, p, g_inf), "split-construction")
    inverse_set = set(inverses)
    _assert(not any(s in inverse_set for s in sigmas), "split-construction", "σ_t = σ_l⁻¹ for some t, l")
    logger.debug(f"Split family for j={j}, p={p} on {sigma} verified")
    return fam


# === Three even cycles ===

def sym_d3_three_even_cycles(sigma: Permutation, j: int) -> DpFamily[Permutation]:
    """
    D_3 family (σ, P^k σ P^{-k}, P^{-k} σ P^k) from three j-cycles, j = 2k.

    Raises:
        InputError: If j is odd, j < 4, or σ has fewer than three j-cycles.
        DefectError: If a helper identity or the family fails.
    """
    if j % 2 or j < 4:
        raise InputError(f"j must be even and at least 4, got {j}")
    k = j // 2
    m = sigma.degree
    group = SymmetricGroup(m)
    cycles = _require_cycles(sigma, j, 3)
    points = [x for cycle in cycles for x in cycle]
    odd = Permutation.from_cycles(m, [tuple(points[0::2])])
    even = Permutation.from_cycles(m, [tuple(points[1::2])])
    b1 = Permutation.from_cycles(m, [(points[t], points[j + t]) for t in range(j)])
    b2 = Permutation.from_cycles(m, [(points[j + t], points[2 * j + t]) for t in range(j)])
    pk = ops.power(even, k)
    pk_inv = pk.inverse()
    tag = "three-cycle-helper"
    _assert(ops.power(odd, k) * pk == b1 * b2, tag, "I^k P^k != B_1 B_2")
    _assert(ops.conjugate(sigma, odd) == even, tag, "σ I σ⁻¹ != P")
    _assert(pk * sigma * pk == sigma * b1 * b2, tag, "P^k σ P^k != σ B_1 B_2")
    _assert(pk_inv * sigma * pk_inv == sigma * b2 * b1, tag, "P^-k σ P^-k != σ B_2 B_1")
    members = [sigma, ops.conjugate(pk, sigma), ops.conjugate(pk_inv, sigma)]
    return require(verify_dp(group, members, 3), "three-cycle-construction")


# === Three transpositions plus a longer cycle ===

def sym_d3_involution_plus(sigma: Permutation) -> DpFamily[Permutation]:
    """
    D_3 family (σ, yα, zα) with α = xσ, from three 2-cycles of σ.

    x = (i_1 i_2)(i_3 i_4)(i_5 i_6), y = (i_1 i_4)(i_3 i_6)(i_2 i_5),
    z = (i_1 i_6)(i_2 i_3)(i_4 i_5).

    Raises:
        InputError: If σ has fewer than three 2-cycles or no cycle of length >= 3.
    """
    m = sigma.degree
    if not any(len(c) >= 3 for c in sigma.cycles()):
        raise InputError(f"{sigma} needs a cycle of length at least 3")
    cycles = _require_cycles(sigma, 2, 3)
    points = [x for cycle in cycles for x in cycle]
    x = word(m, points, ((1, 2), (3, 4), (5, 6)))
    y = word(m, points, ((1, 4), (3, 6), (2, 5)))
    z = word(m, points, ((1, 6), (2, 3), (4, 5)))
    alpha = x * sigma
    members = [sigma, y * alpha, z * alpha]
    return require(verify_dp(SymmetricGroup(m), members, 3), "involution-construction")


# === Transposition and a fixed point ===

def sym_d3_transposition_fixed(sigma: Permutation) -> DpFamily[Permutation]:
    """
    D_3 family (xβ, yβ, zβ) with x = (a b), y = (a c), z = (b c), β = xσ.

    (a b) is the first 2-cycle of σ and c its first fixed point.

    Raises:
        InputError: If σ lacks a fixed point, a 2-cycle or a cycle of length >= 3.
    """
    m = sigma.degree
    if not any(len(c) >= 3 for c in sigma.cycles()):
        raise InputError(f"{sigma} needs a cycle of length at least 3")
    ((a, b),) = _require_cycles(sigma, 2, 1)
    ((c,),) = _require_cycles(sigma, 1, 1)
    x = Permutation.from_cycles(m, [(a, b)])
    y = Permutation.from_cycles(m, [(a, c)])
    z = Permutation.from_cycles(m, [(b, c)])
    beta = x * sigma
    members = [x * beta, y * beta, z * beta]
    return require(verify_dp(SymmetricGroup(m), members, 3), "transposition-construction")


# === Six transpositions ===

def six_transposition_sextuple(sigma: Permutation, variant: str) -> Tuple[List[Permutation], List[Permutation], Permutation, Permutation]:
    """
    Raw sextuple, transporter and the remainder α for the six-transposition words.

    Returns:
        (sigmas, taus, g, alpha).

    Raises:
        InputError: If σ has fewer than six 2-cycles or the variant is unknown.
    """
    if variant not in SIX_TRANSPOSITION_WORDS:
        raise InputError(f"Unknown variant {variant!r}; expected 'plain' or 'bar'")
    m = sigma.degree
    cycles = _require_cycles(sigma, 2, 6)
    points = [x for cycle in cycles for x in cycle]
    words = SIX_TRANSPOSITION_WORDS[variant]
    x = Permutation.from_cycles(m, cycles)
    alpha = x * sigma
    sigmas = [sigma] + [word(m, points, words[name]) * alpha for name in ("sigma2", "sigma3")]
    taus = [word(m, points, words[name]) * alpha for name in ("tau1", "tau2", "tau3")]
    g = word(m, points, words["g"])
    return sigmas, taus, g, alpha


def sym_d3sq_six_transpositions(sigma: Permutation, variant: str = "plain") -> Dp2Family[Permutation]:
    """
    D_3^(2) family from six 2-cycles of σ, with involutive transporter g.

    Besides the family, the bookkeeping identities are checked on the
    parts supported on the twelve points (each member times α⁻¹):
    plain: τ_1 = xB = gxg and σ_2τ_2 = B = g(σ_2τ_2)g;
    bar: τ_1 = B = gxg and σ_2τ_2 = xB = g(σ_2τ_2)g.

    Raises:
        InputError: If σ has fewer than six 2-cycles.
        DefectError: If the family or a bookkeeping identity fails.
    """
    m = sigma.degree
    group = SymmetricGroup(m)
    sigmas, taus, g, alpha = six_transposition_sextuple(sigma, variant)
    points = [x for cycle in ops.cycles_of_length(sigma, 2)[:6] for x in cycle]
    x = sigma * alpha.inverse()
    b = word(m, points, _B_WORD)
    alpha_inv = alpha.inverse()
    core = {name: member * alpha_inv for name, member in zip(("tau1", "sigma2", "tau2"), (taus[0], sigmas[1], taus[1]))}
    tag = f"six-transposition-{variant}"
    _assert(g * g == group.identity, tag, "g is not an involution")
    _assert(ops.conjugate(g, sigma) == taus[0], tag, "g ▷ σ != τ_1")
    product = core["sigma2"] * core["tau2"]
    if variant == "plain":
        _assert(core["tau1"] == x * b == g * x * g, tag, "τ_1 != xB = gxg")
        _assert(product == b == g * product * g, tag, "σ_2τ_2 != B = g σ_2τ_2 g")
    else:
        _assert(core["tau1"] == b == g * x * g, tag, "τ_1 != B = gxg")
        _assert(product == x * b == g * product * g, tag, "σ_2τ_2 != xB = g σ_2τ_2 g")
    fam = require(verify_dp2_members(group, sigmas, taus, 3, g), tag)
    logger.debug(f"Six-transposition family ({variant}) on {sigma} verified")
    return fam


def is_odd_prime(p: int) -> bool:
    return p > 2 and isprime(p)
