"""Classification of conjugacy classes into certificates.

Symmetric-group classes go through a fixed dispatch of constructions,
most specific first; the first construction whose hypotheses match
produces the certificate.
"""

import logging
from typing import Callable, List, Optional, Sequence, Tuple, Union

from sympy import primefactors

from rackit.criteria.codec import class_to_json, family_to_json, in_class
from rackit.criteria.corollaries import (
    LEMMA_ODD,
    conditional_theorem_report,
    corollary_dp,
    corollary_octa2,
    lemma_odd_verdict,
)
from rackit.criteria.types import Certificate, Verdict
from rackit.dtype.families import enumerate_d3_pairs
from rackit.dtype.symmetric import (
    sym_d3_involution_plus,
    sym_d3_three_even_cycles,
    sym_d3_transposition_fixed,
    sym_d3sq_six_transpositions,
    sym_dp2_split,
)
from rackit.errors import InputError
from rackit.matgrp.families import gln_r2_criterion
from rackit.matgrp.group import GeneralLinearGroup, diagonal_class_data
from rackit.matgrp.ops import det_char_value, det_character
from rackit.otype.symmetric import sym_o2_8cycle
from rackit.perm import ops
from rackit.perm.group import SymmetricGroup
from rackit.perm.types import ClassData, CycleType
from rackit.version import __version__

logger = logging.getLogger(__name__)

DEFAULT_SEARCH_BUDGET = 50_000


def _certificate(c: ClassData, verdict: Verdict, **kwargs) -> Certificate:
    return Certificate(
        group=c.group_spec,
        class_info=class_to_json(c),
        verdict=verdict,
        version=__version__,
        **kwargs,
    )


# === Dispatch steps ===

def _split(group: SymmetricGroup, c: ClassData) -> Optional[Certificate]:
    t = c.cycle_type
    for j in t.lengths():
        if j % 2:
            continue
        for p in primefactors(j // 2):
            if p == 2:
                continue
            fam = sym_dp2_split(c.representative, j, p)
            cert = corollary_dp(
                group, c, fam.mu, c.element_order - 1, "co:type6k^nj", basis=("co:type6k^nj", "claim:type6k^nj")
            )
            cert.flags.update({"j": j, "p": p})
            return cert
    return None


def _transposition_fixed(group: SymmetricGroup, c: ClassData) -> Optional[Certificate]:
    t = c.cycle_type
    if t.n(1) < 1 or t.n(2) < 1 or not any(j >= 3 for j in t.lengths()):
        return None
    fam = sym_d3_transposition_fixed(c.representative)
    return corollary_dp(group, c, fam, c.element_order - 1, "exa:12m", basis=("exa:12m", "co:especial"))


def _three_even_cycles(group: SymmetricGroup, c: ClassData) -> Optional[Certificate]:
    t = c.cycle_type
    j = next((j for j in t.lengths() if j % 2 == 0 and j >= 4 and t.n(j) >= 3), None)
    if j is None:
        return None
    fam = sym_d3_three_even_cycles(c.representative, j)
    cert = corollary_dp(group, c, fam, c.element_order - 1, "co:type2k^3", basis=("co:type2k^3", "co:especial"))
    cert.flags["j"] = j
    return cert


def _involution_plus(group: SymmetricGroup, c: ClassData) -> Optional[Certificate]:
    t = c.cycle_type
    if t.n(2) < 3 or not any(j >= 3 for j in t.lengths()):
        return None
    fam = sym_d3_involution_plus(c.representative)
    return corollary_dp(group, c, fam, c.element_order - 1, "co:type2^3", basis=("co:type2^3", "co:especial"))


def _six_transpositions(group: SymmetricGroup, c: ClassData) -> Optional[Certificate]:
    if c.cycle_type.n(2) < 6:
        return None
    plain = sym_d3sq_six_transpositions(c.representative, "plain")
    bar = sym_d3sq_six_transpositions(c.representative, "bar")
    for fam in (plain, bar):
        if not all(in_class(c, x) for x in fam.members):
            raise InputError("Six-transposition sextuple leaves the class")
    report = conditional_theorem_report(group, plain)
    return _certificate(
        c,
        Verdict.INFINITE_WHEN_Q_MINUS_ONE,
        basis=("co:type2n2:6", "teor:aplicAHSch"),
        construction="co:type2n2:6",
        witness=family_to_json(group, plain),
        extra_witnesses=(family_to_json(group, bar),),
        hypotheses=report.to_json(),
        notes=(
            "both sextuples verified; the upgrade to every ρ needs the representation "
            "theory of the centralizer, which is not derived here",
        ),
    )


def _pure_remainder(t: CycleType) -> bool:
    return t.n(8) in (1, 2) and all(j in (1, 2, 8) for j in t.lengths())


def _eight_cycle(group: SymmetricGroup, c: ClassData) -> Optional[Certificate]:
    if not _pure_remainder(c.cycle_type):
        return None
    result = sym_o2_8cycle(c.representative)
    cert = corollary_octa2(group, c, result.family, 3, 5, "ex:8-ciclo", basis=("ex:8-ciclo",))
    cert.flags["case"] = result.case
    return cert


def _eight_cycle_general(group: SymmetricGroup, c: ClassData) -> Optional[Certificate]:
    if c.cycle_type.n(8) not in (1, 2) or _pure_remainder(c.cycle_type):
        return None
    result = sym_o2_8cycle(c.representative, allow_remainder=True)
    report = conditional_theorem_report(group, result.family)
    return _certificate(
        c,
        Verdict.INFINITE_WHEN_Q_MINUS_ONE,
        basis=("ex:8-ciclo", "teor:aplicAHSch2"),
        construction="ex:8-ciclo:remainder",
        witness=family_to_json(group, result.family),
        hypotheses=report.to_json(),
        flags={
            "case": result.case,
            "sigma6_is_cube": result.sigma6_is_cube,
            "tau1_is_fifth_power": result.tau1_is_fifth_power,
            "tau6_is_inverse": result.tau6_is_inverse,
        },
        notes=("conditional on the listed hypotheses for ρ",),
    )


Step = Callable[[SymmetricGroup, ClassData], Optional[Certificate]]

DISPATCH: Tuple[Tuple[str, Step], ...] = (
    ("co:type6k^nj", _split),
    ("exa:12m", _transposition_fixed),
    ("co:type2k^3", _three_even_cycles),
    ("co:type2^3", _involution_plus),
    ("co:type2n2:6", _six_transpositions),
    ("ex:8-ciclo", _eight_cycle),
)


def classify_sym_class(
    m: int,
    t: Union[CycleType, str],
    search_budget: int = DEFAULT_SEARCH_BUDGET,
) -> Certificate:
    """
    Certificate for the class of type t in S_m.

    Order: identity, Lemma odd, the example constructions of DISPATCH,
    the generic D_3 search (skipped for order ≤ 2), the 8-cycle
    construction with a general remainder, and NoCriterion.

    Raises:
        InputError: If t is not a cycle type of S_m.
    """
    if isinstance(t, str):
        t = ops.parse_cycle_type(t, m)
    if t.degree != m:
        raise InputError(f"Cycle type {t} is not a type of S_{m}")
    c = ops.class_data(m, t)
    group = SymmetricGroup(m)

    if c.element_order == 1:
        return _certificate(
            c,
            Verdict.NO_CRITERION,
            construction="identity",
            notes=("identity class: q_ss = 1 is forced",),
            flags={"degenerate": True},
        )
    if lemma_odd_verdict(c) is Verdict.INFINITE_ALL_REPS:
        logger.info(f"{c.group_spec} class {t}: odd order {c.element_order}")
        return _certificate(c, Verdict.INFINITE_ALL_REPS, basis=(LEMMA_ODD,), construction=LEMMA_ODD)

    for tag, step in DISPATCH:
        cert = step(group, c)
        if cert is not None:
            logger.debug(f"{c.group_spec} class {t} matched {tag}")
            return cert

    search = None
    if c.element_order > 2:
        search = enumerate_d3_pairs(group, c.representative, ops.iter_conjugates(c.representative), search_budget)
        if search.found:
            cert = corollary_dp(
                group, c, search.family, c.element_order - 1, "generic-d3", basis=("co:especial",)
            )
            cert.flags["search"] = {"pairs": search.pairs_checked, "budget": search_budget}
            return cert

    cert = _eight_cycle_general(group, c)
    if cert is not None:
        return cert

    flags = {}
    notes: List[str] = []
    if search is not None:
        flags["search"] = {"pairs": search.pairs_checked, "budget": search_budget, "exhausted": search.exhausted}
        if not search.exhausted:
            notes.append(f"no criterion found within a budget of {search_budget} pairs")
    logger.info(f"{c.group_spec} class {t}: no criterion")
    return _certificate(c, Verdict.NO_CRITERION, construction="none", flags=flags, notes=tuple(notes))


# === GL(N, p) ===

def classify_gl_class(
    p: int,
    diagonal: Sequence[int],
    h: Optional[int] = None,
    generator: Optional[int] = None,
) -> Certificate:
    """
    Certificate for the class of diag(λ) in GL(N, p) from the D_3^(2) sextuple.

    The χ-report gives χ(λ) for the twist h (h = 1 when unset) and every
    twist with χ(λ) = −1. With an explicit h for which χ(λ) ≠ −1 the
    verdict is NoCriterion.

    Raises:
        InputError: If p is not prime or λ is singular.
    """
    c = diagonal_class_data(p, diagonal)
    group = GeneralLinearGroup(c.n, p)
    info = class_to_json(c)
    try:
        report, fam = gln_r2_criterion(p, c.diagonal, 1 if h is None else h, generator)
    except InputError as e:
        logger.info(f"{group.spec} class {c.label}: {e}")
        return Certificate(
            group=group.spec,
            class_info=info,
            verdict=Verdict.NO_CRITERION,
            construction="none",
            notes=(str(e),),
            version=__version__,
        )
    if not all(in_class(c, x) for x in fam.members):
        raise InputError("GL sextuple leaves the class")
    chi = det_character(p, h=report.h, generator=report.generator)
    hypotheses = {
        "theorem": "prop:r2-gln",
        "generator": report.generator,
        "h": report.h,
        "h_given": h is not None,
        "omega": report.omega,
        "normalized_diagonal": list(report.diagonal),
        "determinant": report.determinant,
        "chi_exponent": report.chi_exponent,
        "chi_is_minus_one": report.chi_is_minus_one,
        "chi_sigma0": det_char_value(chi, fam.mu[0]),
        "chi_tau0": det_char_value(chi, fam.nu[0]),
        "twists_with_minus_one": list(report.twists_with_minus_one),
    }
    verdict = Verdict.INFINITE_WHEN_Q_MINUS_ONE
    notes: Tuple[str, ...] = ()
    if h is not None and not report.chi_is_minus_one:
        verdict = Verdict.NO_CRITERION
        notes = (f"χ(λ) != −1 for h = {h}",)
    return Certificate(
        group=group.spec,
        class_info=info,
        verdict=verdict,
        basis=("exa:gl2-triple", "prop:r2-gln"),
        construction="exa:gl2-triple",
        witness=family_to_json(group, fam),
        hypotheses=hypotheses,
        notes=notes,
        version=__version__,
    )
