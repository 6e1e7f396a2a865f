"""Verifiers for families of type 𝔒 and 𝔒^(2), and their consequence laws."""

import logging
from typing import Optional, Sequence, TypeVar, Union

from rackit.dtype.types import Dp2Family, DpFamily
from rackit.errors import DefectError, Diagnosis, FamilyCheck, InputError
from rackit.groups.base import BaseGroup
from rackit.otype.types import OctaConsequences, Octa2Family, OctaFamily, SigmaTauConsequences
from rackit.rack.constructions import OCTAHEDRAL_TABLE

logger = logging.getLogger(__name__)

E = TypeVar("E")

# (i, j, i▷j), 1-based: rows 1 and 2 of the octahedral table.
REDUCED_IDENTITIES = (
    (1, 2, 5), (1, 3, 2), (1, 4, 3), (1, 5, 4), (1, 6, 6),
    (2, 1, 3), (2, 3, 6), (2, 4, 4), (2, 5, 1), (2, 6, 5),
)


def octa(i: int, j: int) -> int:
    """Octahedral product i ▷ j on 1..6."""
    return OCTAHEDRAL_TABLE[i - 1][j - 1]


def _distinct(members: Sequence) -> Optional[tuple]:
    seen = {}
    for i, x in enumerate(members, start=1):
        if x in seen:
            return (seen[x], i)
        seen[x] = i
    return None


def verify_octa(group: BaseGroup[E], members: Sequence[E]) -> FamilyCheck[OctaFamily[E]]:
    """
    Check distinctness and the 36 relations σ_i ▷ σ_j = σ_{i▷j}.

    Raises:
        InputError: If the family does not have six members.
    """
    members = tuple(members)
    if len(members) != 6:
        raise InputError(f"Expected 6 members, got {len(members)}")
    dup = _distinct(members)
    if dup is not None:
        return FamilyCheck(None, Diagnosis.failed(f"σ_{dup[0]} = σ_{dup[1]}", witness=dup))
    checked = 0
    for i in range(1, 7):
        for j in range(1, 7):
            checked += 1
            k = octa(i, j)
            if group.conjugate(members[i - 1], members[j - 1]) != members[k - 1]:
                logger.debug(f"Octahedral relation fails at ({i}, {j})")
                return FamilyCheck(
                    None, Diagnosis.failed(f"σ_{i} ▷ σ_{j} != σ_{k}", witness=(i, j), checked=checked)
                )
    return FamilyCheck(OctaFamily(members), Diagnosis.passed(checked))


def octa_from_reduced(group: BaseGroup[E], members: Sequence[E]) -> FamilyCheck[OctaFamily[E]]:
    """
    Decide type 𝔒 from the ten identities in rows 1 and 2 of the table.

    Raises:
        InputError: If the six elements are not distinct.
        DefectError: If the ten identities hold but the full check fails.
    """
    members = tuple(members)
    if len(members) != 6 or _distinct(members) is not None:
        raise InputError("octa_from_reduced needs six distinct elements")
    for checked, (i, j, k) in enumerate(REDUCED_IDENTITIES, start=1):
        if group.conjugate(members[i - 1], members[j - 1]) != members[k - 1]:
            return FamilyCheck(
                None, Diagnosis.failed(f"σ_{i} ▷ σ_{j} != σ_{k}", witness=(i, j), checked=checked)
            )
    full = verify_octa(group, members)
    if not full.ok:
        logger.error(f"Reduced identities hold but the octahedral check fails: {full.diagnosis.reason}")
        raise DefectError("octa-reduction", full.diagnosis.reason)
    return full


def octa_consequences(group: BaseGroup[E], fam: OctaFamily[E]) -> OctaConsequences[E]:
    """
    Assert the equal-fourth-powers laws of a verified family.

    (i) σ_i⁴ all equal; (ii) σ_1σ_6 = σ_2σ_4 = σ_3σ_5;
    (iii) σ_2²σ_5² = σ_1³σ_6 = σ_3²σ_2²; (iv) σ_5²σ_2² = σ_1σ_6³ = σ_2²σ_3².

    Raises:
        DefectError: On the first law that fails.
    """
    s = {i: fam[i] for i in range(1, 7)}
    sq = {i: group.mul(s[i], s[i]) for i in s}
    fourth = {i: group.mul(sq[i], sq[i]) for i in s}
    pw = group.power
    laws = [(f"σ_{i}⁴ = σ_1⁴", fourth[i], fourth[1]) for i in range(2, 7)]
    laws += [
        ("σ_2σ_4 = σ_1σ_6", group.mul(s[2], s[4]), group.mul(s[1], s[6])),
        ("σ_3σ_5 = σ_1σ_6", group.mul(s[3], s[5]), group.mul(s[1], s[6])),
        ("σ_2²σ_5² = σ_1³σ_6", group.mul(sq[2], sq[5]), group.mul(pw(s[1], 3), s[6])),
        ("σ_3²σ_2² = σ_1³σ_6", group.mul(sq[3], sq[2]), group.mul(pw(s[1], 3), s[6])),
        ("σ_5²σ_2² = σ_1σ_6³", group.mul(sq[5], sq[2]), group.mul(s[1], pw(s[6], 3))),
        ("σ_2²σ_3² = σ_1σ_6³", group.mul(sq[2], sq[3]), group.mul(s[1], pw(s[6], 3))),
    ]
    for law, got, want in laws:
        if got != want:
            logger.error(f"Octahedral consequence failed: {law}")
            raise DefectError("octa-fourth-powers", law)
    return OctaConsequences(fourth_power=fourth[1], product=group.mul(s[1], s[6]), laws_checked=len(laws))


def verify_octa2(
    group: BaseGroup[E],
    sigma: Sequence[E],
    tau: Sequence[E],
    g: Optional[E] = None,
) -> FamilyCheck[Octa2Family[E]]:
    """
    Check both halves, 12-way distinctness and the 72 cross relations.

    On success the σ–τ laws and the fourth-power laws of both halves are
    asserted.

    Raises:
        DefectError: If a consequence law fails on an accepted family.
    """
    left = verify_octa(group, sigma)
    if not left.ok:
        return FamilyCheck(None, Diagnosis.failed(f"σ: {left.diagnosis.reason}", left.diagnosis.witness))
    right = verify_octa(group, tau)
    if not right.ok:
        return FamilyCheck(None, Diagnosis.failed(f"τ: {right.diagnosis.reason}", right.diagnosis.witness))
    s, t = left.family, right.family
    dup = _distinct(s.members + t.members)
    if dup is not None:
        return FamilyCheck(None, Diagnosis.failed(f"members {dup[0]} and {dup[1]} coincide", witness=dup))
    checked = 0
    for i in range(1, 7):
        for j in range(1, 7):
            k = octa(i, j)
            checked += 2
            if group.conjugate(s[i], t[j]) != t[k]:
                return FamilyCheck(
                    None, Diagnosis.failed(f"σ_{i} ▷ τ_{j} != τ_{k}", witness=("sigma", i, j), checked=checked)
                )
            if group.conjugate(t[i], s[j]) != s[k]:
                return FamilyCheck(
                    None, Diagnosis.failed(f"τ_{i} ▷ σ_{j} != σ_{k}", witness=("tau", i, j), checked=checked)
                )
    if g is not None and group.conjugate(g, s[1]) != t[1]:
        return FamilyCheck(None, Diagnosis.failed("g ▷ σ_1 != τ_1", witness=("g",), checked=checked))
    fam = Octa2Family(s, t, g)
    octa_consequences(group, s)
    octa_consequences(group, t)
    sigma_tau_consequences(group, fam)
    return FamilyCheck(fam, Diagnosis.passed(checked))


def sigma_tau_consequences(group: BaseGroup[E], fam: Octa2Family[E]) -> SigmaTauConsequences[E]:
    """
    Assert the σ–τ product laws of an 𝔒^(2) family.

    Raises:
        DefectError: On the first law that fails.
    """
    s, t = fam.sigma, fam.tau
    inv = group.inv
    mul = group.mul
    prod = group.prod
    common = mul(s[1], t[6])
    quotient = mul(inv(s[1]), t[1])
    laws = [
        (f"σ_{a}τ_{b} = σ_1τ_6", mul(s[a], t[b]), common)
        for a, b in ((6, 1), (2, 4), (4, 2), (3, 5), (5, 3))
    ]
    laws += [(f"σ_{j}⁻¹τ_{j} = σ_1⁻¹τ_1", mul(inv(s[j]), t[j]), quotient) for j in range(2, 7)]
    t2_inv_sq = group.power(inv(t[2]), 2)
    s2_inv_sq = group.power(inv(s[2]), 2)
    laws += [
        ("τ_2⁻²σ_5τ_5 = τ_1⁻¹σ_6", prod([t2_inv_sq, s[5], t[5]]), mul(inv(t[1]), s[6])),
        ("τ_2⁻²σ_3τ_3 = σ_1τ_6⁻¹", prod([t2_inv_sq, s[3], t[3]]), mul(s[1], inv(t[6]))),
        ("σ_2⁻²σ_5τ_5 = σ_1⁻²τ_1σ_6", prod([s2_inv_sq, s[5], t[5]]), prod([group.power(inv(s[1]), 2), t[1], s[6]])),
        ("σ_2⁻²σ_3τ_3 = τ_1σ_6⁻¹", prod([s2_inv_sq, s[3], t[3]]), mul(t[1], inv(s[6]))),
    ]
    for law, got, want in laws:
        if got != want:
            logger.error(f"σ–τ consequence failed: {law}")
            raise DefectError("octa2-sigma-tau", law)
    return SigmaTauConsequences(product=common, quotient=quotient, laws_checked=len(laws))


Family = Union[DpFamily, Dp2Family, OctaFamily, Octa2Family]


def conjugate_family(group: BaseGroup[E], fam: Family, g: E) -> Family:
    """
    Transport a family by x ↦ g ▷ x; transporters are conjugated too.

    Conjugation is a rack automorphism, so the result has the same type.
    """
    def move(x):
        return group.conjugate(g, x)

    if isinstance(fam, DpFamily):
        return DpFamily(fam.p, tuple(move(x) for x in fam))
    if isinstance(fam, Dp2Family):
        return Dp2Family(
            conjugate_family(group, fam.mu, g),
            conjugate_family(group, fam.nu, g),
            None if fam.g_inf is None else move(fam.g_inf),
        )
    if isinstance(fam, OctaFamily):
        return OctaFamily(tuple(move(x) for x in fam))
    if isinstance(fam, Octa2Family):
        return Octa2Family(
            conjugate_family(group, fam.sigma, g),
            conjugate_family(group, fam.tau, g),
            None if fam.g is None else move(fam.g),
        )
    raise InputError(f"Cannot transport {type(fam).__name__}")
