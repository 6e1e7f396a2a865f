"""Lemma odd, the power-companion corollaries and the conditional theorems.

The corollaries turn a verified family into a certificate; the
conditional theorems are evaluated on degree-1 characters or listed
symbolically.
"""

import logging
from typing import List, Optional, Tuple, TypeVar, Union

from rackit.braided.types import Character, RootOfUnity
from rackit.braided.yd import DEFAULT_WORD_DEPTH, CharacterEvaluator
from rackit.criteria.codec import AnyClass, class_to_json, family_to_json, in_class
from rackit.criteria.types import Certificate, CharacterReport, HypothesisCheck, Verdict
from rackit.dtype.families import power_companion
from rackit.dtype.types import Dp2Family, DpFamily
from rackit.dtype.symmetric import is_odd_prime
from rackit.errors import InputError
from rackit.groups.base import BaseGroup
from rackit.otype.types import Octa2Family
from rackit.version import __version__

logger = logging.getLogger(__name__)

E = TypeVar("E")

LEMMA_ODD = "lemma-odd"


def lemma_odd_verdict(c: AnyClass) -> Verdict:
    """
    InfiniteAllReps for a real class of odd order > 1, NoCriterion otherwise.

    A real class of even order only opens the q_ss = −1 gate for the
    other criteria. The identity class is degenerate: q_ss = 1 is forced,
    so nothing follows.
    """
    if c.element_order == 1:
        return Verdict.NO_CRITERION
    if c.is_real and c.element_order % 2:
        return Verdict.INFINITE_ALL_REPS
    return Verdict.NO_CRITERION


def upgrade(c: AnyClass) -> Verdict:
    """Verdict of a q = −1 criterion: every ρ when the class is real."""
    return Verdict.INFINITE_ALL_REPS if c.is_real else Verdict.INFINITE_WHEN_Q_MINUS_ONE


def _require_members_in_class(c: AnyClass, members) -> None:
    for n, x in enumerate(members):
        if not in_class(c, x):
            raise InputError(f"Family member {n} is not in the class {class_to_json(c)}")


def corollary_dp(
    group: BaseGroup[E],
    c: AnyClass,
    fam: DpFamily[E],
    k: int,
    construction: str,
    basis: Tuple[str, ...] = (),
) -> Certificate:
    """
    Certificate from a D_p family and an exponent k with μ_0^k ≠ μ_0 in the class.

    The witness is the companion D_p^(2) family (μ, μ^k) with g_∞.

    Raises:
        InputError: If p is not an odd prime, a member is outside the
            class, or k is not admissible.
    """
    if not is_odd_prime(fam.p):
        raise InputError(f"p = {fam.p} is not an odd prime")
    _require_members_in_class(c, fam.members)
    companion = power_companion(group, fam, k)
    _require_members_in_class(c, companion.nu.members)
    verdict = upgrade(c)
    full_basis = tuple(basis) + ("coro:dp-cor",) + ((LEMMA_ODD,) if c.is_real else ())
    logger.info(f"{group.spec} class {class_to_json(c).get('type', '')}: {verdict.value} via {construction}")
    return Certificate(
        group=group.spec,
        class_info=class_to_json(c),
        verdict=verdict,
        basis=full_basis,
        construction=construction,
        witness=family_to_json(group, companion),
        k=k,
        version=__version__,
    )


def corollary_octa2(
    group: BaseGroup[E],
    c: AnyClass,
    fam: Octa2Family[E],
    d: int,
    e: int,
    construction: str,
    basis: Tuple[str, ...] = (),
) -> Certificate:
    """
    Certificate from an 𝔒^(2) family with σ_6 = σ_1^d and τ_1 = σ_1^e.

    Raises:
        InputError: If a power identity fails, the transporter is missing,
            or a member is outside the class.
    """
    s1 = fam.sigma[1]
    if group.power(s1, d) != fam.sigma[6]:
        raise InputError(f"σ_6 != σ_1^{d}")
    if group.power(s1, e) != fam.tau[1]:
        raise InputError(f"τ_1 != σ_1^{e}")
    if fam.g is None:
        raise InputError("The family needs a transporter g")
    _require_members_in_class(c, fam.members)
    verdict = upgrade(c)
    full_basis = tuple(basis) + ("co:especial2",) + ((LEMMA_ODD,) if c.is_real else ())
    return Certificate(
        group=group.spec,
        class_info=class_to_json(c),
        verdict=verdict,
        basis=full_basis,
        construction=construction,
        witness=family_to_json(group, fam),
        d=d,
        e=e,
        version=__version__,
    )


# === Conditional theorems ===

_DP_HYPOTHESES = (
    ("H3", "χ(μ_0) = −1"),
    ("H4a", "χ(g_∞⁻¹ μ_0 g_∞) = −1"),
    ("H4b", "χ(ν_0) = −1"),
)

_OCTA_HYPOTHESES = (
    ("H3", "χ(σ_1) = −1"),
    ("H4", "χ(σ_6) = −1"),
    ("H5", "χ(τ_1) = −1"),
    ("H6", "χ(g⁻¹ σ_1 g) = −1"),
    ("H7", "χ(g⁻¹ σ_6 g) = −1"),
)


def conditional_theorem_report(
    group: BaseGroup[E],
    fam: Union[Dp2Family[E], Octa2Family[E]],
    chi: Optional[Character[E]] = None,
    depth: int = DEFAULT_WORD_DEPTH,
) -> CharacterReport:
    """
    Evaluate the conditional-theorem hypotheses for a degree-1 character.

    (H1) type and (H2) class membership with a transporter are taken from
    the verified family. Without chi the remaining hypotheses are listed
    with holds = None.

    Raises:
        InputError: If the family has no transporter.
        BudgetExceeded: If χ cannot be evaluated on a required element.
    """
    if isinstance(fam, Dp2Family):
        g, theorem, spec = fam.g_inf, "theorem:dp-cor", _DP_HYPOTHESES
        base = fam.mu[0]
    else:
        g, theorem, spec = fam.g, "teor:aplicAHSch2", _OCTA_HYPOTHESES
        base = fam.sigma[1]
    if g is None:
        raise InputError("The conditional theorems need a transporter")
    g_inv = group.inv(g)
    if isinstance(fam, Dp2Family):
        elements = [base, group.prod([g_inv, base, g]), fam.nu[0]]
    else:
        s6 = fam.sigma[6]
        elements = [base, s6, fam.tau[1], group.prod([g_inv, base, g]), group.prod([g_inv, s6, g])]

    checks: List[HypothesisCheck] = [
        HypothesisCheck("H1", "type of the family", True),
        HypothesisCheck("H2", "members in the class, transporter present", True),
    ]
    evaluate = CharacterEvaluator(group, chi, depth) if chi is not None else None
    minus_one = RootOfUnity.minus_one()
    for (name, statement), element in zip(spec, elements):
        if evaluate is None:
            checks.append(HypothesisCheck(name, statement))
            continue
        value = evaluate(element)
        checks.append(HypothesisCheck(name, statement, value == minus_one, str(value)))
    report = CharacterReport(theorem=theorem, hypotheses=tuple(checks), character=chi.name if chi else "")
    if report.failing:
        logger.debug(f"{theorem}: hypotheses {report.failing} fail")
    return report
