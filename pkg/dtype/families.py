"""Derived D_p constructions: the nine-identity reduction, power companions,
central shifts and the generic D_3 search."""

import logging
from typing import Iterable, Sequence, TypeVar

from rackit.dtype.types import D3SearchResult, Dp2Family, DpFamily
from rackit.dtype.verify import d3_characterize, verify_dp, verify_dp2, verify_dp2_members
from rackit.errors import DefectError, Diagnosis, FamilyCheck, InputError
from rackit.groups.base import BaseGroup

logger = logging.getLogger(__name__)

E = TypeVar("E")

# (tag, left family, i, right family, j, result family, k), 1-based as written.
NINE_IDENTITIES = (
    ("(123)", "s", 1, "s", 2, "s", 3),
    ("(132)", "s", 1, "s", 3, "s", 2),
    ("(231)", "s", 2, "s", 3, "s", 1),
    ("(123)'", "t", 1, "t", 2, "t", 3),
    ("(132)'", "t", 1, "t", 3, "t", 2),
    ("(231)'", "t", 2, "t", 3, "t", 1),
    ("(st111)", "s", 1, "t", 1, "t", 1),
    ("(st213)", "s", 2, "t", 1, "t", 3),
    ("(ts123)", "t", 1, "s", 2, "s", 3),
)


def nine_identity_d3sq(
    group: BaseGroup[E],
    sigmas: Sequence[E],
    taus: Sequence[E],
) -> FamilyCheck[Dp2Family[E]]:
    """
    Decide D_3^(2) from nine identities among six distinct elements.

    σ_1, σ_2, σ_3 become μ_0, μ_1, μ_2 (likewise τ and ν); for three
    indices "the third one" is the same in both numberings.

    Raises:
        InputError: If the six elements are not distinct.
        DefectError: If the nine identities hold but the full check fails.
    """
    sigmas, taus = tuple(sigmas), tuple(taus)
    if len(sigmas) != 3 or len(taus) != 3:
        raise InputError("nine_identity_d3sq needs three σ and three τ")
    if len(set(sigmas + taus)) != 6:
        raise InputError("The six elements must be distinct")
    named = {"s": sigmas, "t": taus}
    for checked, (tag, a, i, b, j, c, k) in enumerate(NINE_IDENTITIES, start=1):
        if group.conjugate(named[a][i - 1], named[b][j - 1]) != named[c][k - 1]:
            logger.debug(f"Identity {tag} fails")
            return FamilyCheck(None, Diagnosis.failed(f"identity {tag} fails", witness=(tag,), checked=checked))
    full = verify_dp2_members(group, sigmas, taus, 3)
    if not full.ok:
        logger.error(f"Nine identities hold but D_3^(2) fails: {full.diagnosis.reason}")
        raise DefectError("nine-identity-reduction", full.diagnosis.reason)
    return full


def power_companion(group: BaseGroup[E], fam: DpFamily[E], k: int) -> Dp2Family[E]:
    """
    The D_p^(2) family (μ, μ^k) with g_∞ ▷ μ_0 = μ_0^k.

    Args:
        group: Ambient group, with a conjugator search.
        fam: A verified D_p family.
        k: Odd exponent, 1 < k < |μ_0|.

    Raises:
        InputError: If k is even or out of range, μ_0^k = μ_0, or μ_0^k
            is not conjugate to μ_0.
        DefectError: If (μ, μ^k) fails verification.
    """
    mu0 = fam[0]
    order = group.order(mu0)
    if k % 2 == 0:
        raise InputError(f"Exponent k must be odd, got {k}")
    if not 1 < k < order:
        raise InputError(f"Exponent k must satisfy 1 < k < {order}, got {k}")
    nu0 = group.power(mu0, k)
    if nu0 == mu0:
        raise InputError(f"μ_0^{k} = μ_0")
    g_inf = group.find_conjugator(mu0, nu0)
    if g_inf is None:
        raise InputError(f"μ_0^{k} is not conjugate to μ_0")
    nu = verify_dp(group, [group.power(x, k) for x in fam], fam.p)
    if not nu.ok:
        raise DefectError("power-companion", f"μ^{k} is not of type D_{fam.p}: {nu.diagnosis.reason}")
    check = verify_dp2(group, fam, nu.family, g_inf)
    if not check.ok:
        raise DefectError("power-companion", check.diagnosis.reason)
    logger.debug(f"Power companion with k={k} verified")
    return check.family


def central_shift(group: BaseGroup[E], fam, z: E):
    """
    Multiply every member of a D_p or D_p^(2) family by z.

    Raises:
        InputError: If z does not commute with every member.
        DefectError: If the shifted family fails verification.
    """
    members = fam.members
    if not all(group.commutes(z, x) for x in members):
        raise InputError(f"{group.format(z)} does not commute with the family")
    if isinstance(fam, DpFamily):
        check = verify_dp(group, [group.mul(z, x) for x in fam], fam.p)
    else:
        check = verify_dp2_members(
            group,
            [group.mul(z, x) for x in fam.mu],
            [group.mul(z, x) for x in fam.nu],
            fam.p,
        )
    if not check.ok:
        raise DefectError("central-shift", check.diagnosis.reason)
    return check.family


def enumerate_d3_pairs(
    group: BaseGroup[E],
    representative: E,
    class_elements: Iterable[E],
    budget: int,
) -> D3SearchResult[E]:
    """
    First s2 in class order with (representative, s2) of type D_3.

    Args:
        group: Ambient group.
        representative: σ_1, fixed.
        class_elements: Deterministic enumeration of the class.
        budget: Maximum number of pairs tried.

    Returns:
        The family found, pairs tried, and whether the class was exhausted.
    """
    if budget < 1:
        raise InputError(f"Budget must be positive, got {budget}")
    checked = 0
    for s2 in class_elements:
        if s2 == representative:
            continue
        if checked >= budget:
            logger.warning(f"Generic D_3 search stopped after {budget} pairs")
            return D3SearchResult(None, checked, exhausted=False)
        checked += 1
        result = d3_characterize(group, representative, s2)
        if result.ok:
            logger.debug(f"Generic D_3 search found a family after {checked} pairs")
            return D3SearchResult(result.family, checked, exhausted=False)
    return D3SearchResult(None, checked, exhausted=True)


def require(check: FamilyCheck, tag: str):
    """Unwrap a construction's verification, logging the defect."""
    if not check.ok:
        logger.error(f"{tag}: {check.diagnosis.reason}")
    return check.unwrap(tag)
