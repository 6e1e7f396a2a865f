"""Verifiers for families of type D_p and D_p^(2).

Verifiers return FamilyCheck values; a failed consequence law that is
implied by an accepted family raises DefectError.
"""

import logging
from typing import Optional, Sequence, TypeVar

from rackit.dtype.types import (
    Dp2Consequences,
    Dp2Family,
    DpFamily,
    DpTransporters,
    TransporterCocycleReport,
)
from rackit.errors import DefectError, Diagnosis, FamilyCheck, InputError
from rackit.groups.base import BaseGroup

logger = logging.getLogger(__name__)

E = TypeVar("E")


def _first_duplicate(group: BaseGroup[E], members: Sequence[E]) -> Optional[tuple]:
    seen = {}
    for i, x in enumerate(members):
        if x in seen:
            return (seen[x], i)
        seen[x] = i
    return None


def _half(p: int) -> int:
    """Inverse of 2 in Z/p."""
    return pow(2, -1, p)


# === D_p ===

def verify_dp(group: BaseGroup[E], members: Sequence[E], p: int) -> FamilyCheck[DpFamily[E]]:
    """
    Check μ_i ▷ μ_j = μ_{2i-j} for all i, j in Z/p, with distinct members.

    On success the derived laws for μ_i⁻¹ and odd powers (k = 3) are
    asserted as well.

    Args:
        group: Ambient group.
        members: μ_0, ..., μ_{p-1}.
        p: Index modulus.

    Returns:
        FamilyCheck with the family or the failing pair.

    Raises:
        InputError: If the member count differs from p.
        DefectError: If a derived law fails on an accepted family.
    """
    members = tuple(members)
    if len(members) != p:
        raise InputError(f"Expected {p} members, got {len(members)}")
    dup = _first_duplicate(group, members)
    if dup is not None:
        return FamilyCheck(None, Diagnosis.failed(f"duplicate members at indices {dup}", witness=dup))
    for i in range(p):
        for j in range(p):
            if group.conjugate(members[i], members[j]) != members[(2 * i - j) % p]:
                logger.debug(f"D_{p} relation fails at ({i}, {j})")
                return FamilyCheck(
                    None,
                    Diagnosis.failed(
                        f"μ_{i} ▷ μ_{j} != μ_{(2 * i - j) % p}",
                        witness=(i, j),
                        checked=i * p + j + 1,
                    ),
                )
    fam = DpFamily(p, members)
    _assert_inverse_and_power_laws(group, fam, k=3)
    return FamilyCheck(fam, Diagnosis.passed(p * p))


def _assert_inverse_and_power_laws(group: BaseGroup[E], fam: DpFamily[E], k: int) -> None:
    p = fam.p
    inv = [group.inv(x) for x in fam.members]
    pw = [group.power(x, k) for x in fam.members]
    for i in range(p):
        for j in range(p):
            r = (2 * i - j) % p
            laws = (
                (group.conjugate(inv[i], fam[j]), fam[r], "μ_i⁻¹ ▷ μ_j = μ_{2i-j}"),
                (group.conjugate(fam[i], inv[j]), inv[r], "μ_i ▷ μ_j⁻¹ = μ_{2i-j}⁻¹"),
                (group.conjugate(inv[i], inv[j]), inv[r], "μ_i⁻¹ ▷ μ_j⁻¹ = μ_{2i-j}⁻¹"),
                (group.conjugate(pw[i], fam[j]), fam[r], f"μ_i^{k} ▷ μ_j = μ_{{2i-j}}"),
                (group.conjugate(fam[i], pw[j]), pw[r], f"μ_i ▷ μ_j^{k} = μ_{{2i-j}}^{k}"),
                (group.conjugate(pw[i], pw[j]), pw[r], f"μ_i^{k} ▷ μ_j^{k} = μ_{{2i-j}}^{k}"),
            )
            for got, want, law in laws:
                if got != want:
                    raise DefectError("dp-derived-law", f"{law} fails at ({i}, {j})")


def extend_dp_seed(group: BaseGroup[E], mu0: E, mu1: E, p: int) -> FamilyCheck[DpFamily[E]]:
    """
    Grow (μ_0, μ_1) by μ_{i+1} := μ_i ▷ μ_{i-1} and verify the result.

    Raises:
        InputError: If the seeds coincide.
    """
    if mu0 == mu1:
        raise InputError("Seeds must be distinct")
    members = [mu0, mu1]
    while len(members) < p:
        nxt = group.conjugate(members[-1], members[-2])
        if nxt in members:
            k = members.index(nxt)
            return FamilyCheck(
                None,
                Diagnosis.failed(f"recursion collides: μ_{len(members)} = μ_{k}", witness=(len(members), k)),
            )
        members.append(nxt)
    return verify_dp(group, members, p)


def d3_characterize(group: BaseGroup[E], s1: E, s2: E) -> FamilyCheck[DpFamily[E]]:
    """
    Decide whether (s1, s2, s1 ▷ s2) is of type D_3 by three conditions.

    The conditions are: s1 does not commute with s2, s1² commutes with s2,
    and s1 = s2 ▷ (s1 ▷ s2).

    Raises:
        InputError: If s1 = s2.
    """
    if s1 == s2:
        raise InputError("d3_characterize needs distinct elements")
    s3 = group.conjugate(s1, s2)
    if group.commutes(s1, s2):
        return FamilyCheck(None, Diagnosis.failed("σ_1 commutes with σ_2", witness=(1,)))
    if not group.commutes(group.mul(s1, s1), s2):
        return FamilyCheck(None, Diagnosis.failed("σ_1² does not commute with σ_2", witness=(2,)))
    if group.conjugate(s2, s3) != s1:
        return FamilyCheck(None, Diagnosis.failed("σ_1 != σ_2 ▷ (σ_1 ▷ σ_2)", witness=(3,)))
    # (s1, s2, s3) is indexed as μ_0, μ_2, μ_1 so that μ_0 ▷ μ_2 = μ_1.
    check = verify_dp(group, (s1, s3, s2), 3)
    if not check.ok:
        raise DefectError("d3-characterization", f"conditions hold but D_3 fails: {check.diagnosis.reason}")
    return check


# === D_p^(2) ===

def verify_dp2(
    group: BaseGroup[E],
    mu: DpFamily[E],
    nu: DpFamily[E],
    g_inf: Optional[E] = None,
) -> FamilyCheck[Dp2Family[E]]:
    """
    Check the 2p² cross relations and disjointness of two D_p families.

    For odd p the consequence suite is asserted on success.

    Raises:
        InputError: If p differs between mu and nu.
        DefectError: If a consequence law fails on an accepted family.
    """
    if mu.p != nu.p:
        raise InputError(f"Families of different p: {mu.p} and {nu.p}")
    p = mu.p
    mu_set = set(mu.members)
    for j, x in enumerate(nu.members):
        if x in mu_set:
            i = mu.members.index(x)
            return FamilyCheck(None, Diagnosis.failed(f"overlap μ_{i} = ν_{j}", witness=(i, j)))
    checked = 0
    for i in range(p):
        for j in range(p):
            checked += 2
            r = (2 * i - j) % p
            if group.conjugate(mu[i], nu[j]) != nu[r]:
                return FamilyCheck(
                    None, Diagnosis.failed(f"μ_{i} ▷ ν_{j} != ν_{r}", witness=("mu", i, j), checked=checked)
                )
            if group.conjugate(nu[i], mu[j]) != mu[r]:
                return FamilyCheck(
                    None, Diagnosis.failed(f"ν_{i} ▷ μ_{j} != μ_{r}", witness=("nu", i, j), checked=checked)
                )
    if g_inf is not None and group.conjugate(g_inf, mu[0]) != nu[0]:
        return FamilyCheck(None, Diagnosis.failed("g_∞ ▷ μ_0 != ν_0", witness=("g_inf",), checked=checked))
    fam = Dp2Family(mu, nu, g_inf)
    if p % 2:
        dp2_consequences(group, fam)
    return FamilyCheck(fam, Diagnosis.passed(checked))


def verify_dp2_members(
    group: BaseGroup[E],
    mu: Sequence[E],
    nu: Sequence[E],
    p: int,
    g_inf: Optional[E] = None,
) -> FamilyCheck[Dp2Family[E]]:
    """verify_dp on both halves, then verify_dp2."""
    first = verify_dp(group, mu, p)
    if not first.ok:
        return FamilyCheck(None, Diagnosis.failed(f"μ: {first.diagnosis.reason}", first.diagnosis.witness))
    second = verify_dp(group, nu, p)
    if not second.ok:
        return FamilyCheck(None, Diagnosis.failed(f"ν: {second.diagnosis.reason}", second.diagnosis.witness))
    return verify_dp2(group, first.family, second.family, g_inf)


def dp2_consequences(group: BaseGroup[E], fam: Dp2Family[E]) -> Dp2Consequences[E]:
    """
    Assert the laws forced on a D_p^(2) family with p odd.

    Squares are constant and central in the family, μ_iν_i and ν_iμ_i are
    constant, and the three product identities hold for t in {0, 1, 2}
    (both orientations).

    Raises:
        InputError: If p is even.
        DefectError: On the first law that fails.
    """
    p = fam.p
    if p % 2 == 0:
        raise InputError("The consequence laws need odd p")
    mu, nu = fam.mu, fam.nu
    sq_mu = [group.mul(x, x) for x in mu]
    sq_nu = [group.mul(x, x) for x in nu]
    checked = 0

    def require(condition: bool, law: str) -> None:
        nonlocal checked
        checked += 1
        if not condition:
            logger.error(f"Consequence law failed: {law}")
            raise DefectError("dp2-consequence", law)

    for i in range(p):
        require(sq_mu[i] == sq_mu[0], f"μ_{i}² = μ_0²")
        require(sq_nu[i] == sq_nu[0], f"ν_{i}² = ν_0²")
        require(group.commutes(sq_mu[0], nu[i]), f"μ² commutes with ν_{i}")
        require(group.commutes(sq_nu[0], mu[i]), f"ν² commutes with μ_{i}")
        require(group.mul(mu[i], nu[i]) == group.mul(mu[0], nu[0]), f"μ_{i}ν_{i} = μ_0ν_0")
        require(group.mul(nu[i], mu[i]) == group.mul(nu[0], mu[0]), f"ν_{i}μ_{i} = ν_0μ_0")

    for a, b in ((mu, nu), (nu, mu)):
        for t in range(min(3, p)):
            for k in range(p):
                for l in range(p):
                    d = l - k
                    require(
                        group.mul(a[k], a[l]) == group.mul(a[t * d + k], a[t * d + l]),
                        f"product law (i) at k={k}, l={l}, t={t}",
                    )
                    require(
                        group.mul(a[k], b[l]) == group.mul(a[2 * t * d + k], b[2 * t * d + l]),
                        f"product law (ii) at k={k}, l={l}, t={t}",
                    )
                    require(
                        group.mul(a[k], b[l]) == group.mul(b[(2 * t + 1) * d + k], a[(2 * t + 1) * d + l]),
                        f"product law (iii) at k={k}, l={l}, t={t}",
                    )
    return Dp2Consequences(
        mu_square=sq_mu[0],
        nu_square=sq_nu[0],
        mu_nu=group.mul(mu[0], nu[0]),
        nu_mu=group.mul(nu[0], mu[0]),
        laws_checked=checked,
    )


# === Transporters ===

def dp_transporters(group: BaseGroup[E], fam: Dp2Family[E]) -> DpTransporters[E]:
    """
    g_i = μ_{i/2}, f_i = ν_{i/2}·g_∞.

    Raises:
        InputError: If p is even or g_∞ is missing.
        DefectError: If some transporter misses its target.
    """
    p = fam.p
    if p % 2 == 0:
        raise InputError("Transporters need odd p")
    if fam.g_inf is None:
        raise InputError("Transporters need g_∞")
    half = _half(p)
    g = tuple(fam.mu[i * half] for i in range(p))
    f = tuple(group.mul(fam.nu[i * half], fam.g_inf) for i in range(p))
    for i in range(p):
        if group.conjugate(g[i], fam.mu[0]) != fam.mu[i]:
            raise DefectError("dp-transporter", f"g_{i} ▷ μ_0 != μ_{i}")
        if group.conjugate(f[i], fam.mu[0]) != fam.nu[i]:
            raise DefectError("dp-transporter", f"f_{i} ▷ μ_0 != ν_{i}")
    return DpTransporters(g=g, f=f)


def transporter_cocycle_report(group: BaseGroup[E], fam: Dp2Family[E]) -> TransporterCocycleReport[E]:
    """
    Compute α_ij, β_ij, γ_ij, δ_ij for every (i, j) and check they are constant.

    α_ij = g_{i▷j}⁻¹ μ_i g_j, β_ij = f_{i▷j}⁻¹ μ_i f_j,
    γ_ij = g_{i▷j}⁻¹ ν_i g_j, δ_ij = f_{i▷j}⁻¹ ν_i f_j.

    Returns:
        The constants α = δ = μ_0, β = g_∞⁻¹μ_0g_∞, γ = ν_0.

    Raises:
        DefectError: If a twist differs from its predicted value.
    """
    tr = dp_transporters(group, fam)
    p = fam.p
    g_inv = [group.inv(x) for x in tr.g]
    f_inv = [group.inv(x) for x in tr.f]
    mu0 = fam.mu[0]
    expected = {
        "alpha": mu0,
        "beta": group.prod([group.inv(fam.g_inf), mu0, fam.g_inf]),
        "gamma": fam.nu[0],
        "delta": mu0,
    }
    for i in range(p):
        for j in range(p):
            h = (2 * i - j) % p
            got = {
                "alpha": group.prod([g_inv[h], fam.mu[i], tr.g[j]]),
                "beta": group.prod([f_inv[h], fam.mu[i], tr.f[j]]),
                "gamma": group.prod([g_inv[h], fam.nu[i], tr.g[j]]),
                "delta": group.prod([f_inv[h], fam.nu[i], tr.f[j]]),
            }
            for name, value in got.items():
                if value != expected[name]:
                    logger.error(f"Twist {name}_{i}{j} = {group.format(value)} is not constant")
                    raise DefectError("dp-twist-constancy", f"{name}_{i}{j} differs from its constant value")
    return TransporterCocycleReport(
        alpha=expected["alpha"],
        beta=expected["beta"],
        gamma=expected["gamma"],
        delta=expected["delta"],
        pairs_checked=p * p,
    )
