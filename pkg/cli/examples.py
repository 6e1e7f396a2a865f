"""Replays of the worked examples.

Each replay builds its witness, runs the full verifier and the lemma
suites that go with it, and raises DefectError on the first mismatch.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List

from rackit.braided.types import Character, RootOfUnity
from rackit.config.run import RunConfig
from rackit.criteria.classify import classify_gl_class, classify_sym_class
from rackit.criteria.codec import family_from_json, group_from_spec
from rackit.criteria.types import Certificate, Verdict
from rackit.dtype.symmetric import sym_d3sq_six_transpositions, sym_dp2_split
from rackit.dtype.types import Dp2Family
from rackit.dtype.verify import dp2_consequences, transporter_cocycle_report, verify_dp
from rackit.errors import DefectError, InputError
from rackit.matgrp.families import gl2_d3_family
from rackit.matgrp.group import GeneralLinearGroup
from rackit.otype.symmetric import s4_sextuple, sym_o2_8cycle
from rackit.otype.transporters import octa_subspace_cocycle, octa_transporter_suite
from rackit.otype.verify import octa_consequences, verify_octa
from rackit.perm import ops
from rackit.perm.group import SymmetricGroup

logger = logging.getLogger(__name__)


@dataclass
class ReplayResult:
    tag: str
    summary: Dict[str, Any] = field(default_factory=dict)
    certificates: List[Certificate] = field(default_factory=list)


def _expect(condition: bool, tag: str, message: str) -> None:
    if not condition:
        raise DefectError(tag, message)


def _representative(m: int, t: str):
    return ops.class_data(m, ops.parse_cycle_type(t, m)).representative


def _dp2_suites(group, fam: Dp2Family) -> Dict[str, Any]:
    laws = dp2_consequences(group, fam)
    twists = transporter_cocycle_report(group, fam)
    return {"consequence_laws": laws.laws_checked, "twist_pairs": twists.pairs_checked}


def _classified(tag: str, m: int, t: str, construction: str, config: RunConfig) -> ReplayResult:
    cert = classify_sym_class(m, t, search_budget=config.search_budget)
    _expect(cert.construction == construction, tag, f"S_{m} class {t} went to {cert.construction}")
    _expect(cert.verdict is not Verdict.NO_CRITERION, tag, f"S_{m} class {t} has no criterion")
    group = group_from_spec(cert.group)
    fam = family_from_json(group, cert.witness)
    summary = {"class": f"S_{m} {t}", "verdict": cert.verdict.value}
    if isinstance(fam, Dp2Family):
        summary.update(_dp2_suites(group, fam))
    return ReplayResult(tag, summary, [cert])


def replay_12m(config: RunConfig) -> ReplayResult:
    return _classified("exa:12m", 6, "3,2,1", "exa:12m", config)


def replay_split(config: RunConfig) -> ReplayResult:
    tag = "co:type6k^nj"
    sigma = _representative(6, "6")
    group = SymmetricGroup(6)
    fam = sym_dp2_split(sigma, 6, 3)
    summary = {"split_family": _dp2_suites(group, fam)}
    result = _classified(tag, 6, "6", tag, config)
    result.summary.update(summary)
    return result


def replay_three_even_cycles(config: RunConfig) -> ReplayResult:
    return _classified("co:type2k^3", 12, "4^3", "co:type2k^3", config)


def replay_involution_plus(config: RunConfig) -> ReplayResult:
    return _classified("co:type2^3", 9, "3,2^3", "co:type2^3", config)


def replay_six_transpositions(config: RunConfig) -> ReplayResult:
    tag = "co:type2n2:6"
    sigma = _representative(12, "2^6")
    group = SymmetricGroup(12)
    summary: Dict[str, Any] = {}
    for variant in ("plain", "bar"):
        fam = sym_d3sq_six_transpositions(sigma, variant)
        summary[variant] = {"consequence_laws": dp2_consequences(group, fam).laws_checked}
    cert = classify_sym_class(12, "2^6", search_budget=config.search_budget)
    _expect(cert.construction == tag, tag, f"2^6 went to {cert.construction}")
    _expect(len(cert.extra_witnesses) == 1, tag, "both sextuples must be recorded")
    return ReplayResult(tag, summary, [cert])


def replay_eight_cycle(config: RunConfig) -> ReplayResult:
    tag = "ex:8-ciclo"
    summary: Dict[str, Any] = {}
    certificates = []
    for m, t in ((8, "8"), (16, "8^2")):
        result = sym_o2_8cycle(_representative(m, t))
        group = SymmetricGroup(m)
        suite = octa_transporter_suite(group, result.family, bound=config.twist_word_length)
        _expect(suite.all_odd, tag, f"CASE ({result.case}): even twist")
        _expect(suite.power_case, tag, f"CASE ({result.case}): twists are not powers of σ")
        summary[f"case {result.case}"] = {"twists": len(suite.twists), "shapes": dict(sorted(suite.shape_counts.items()))}
        cert = classify_sym_class(m, t, search_budget=config.search_budget)
        _expect(cert.construction == tag, tag, f"S_{m} class {t} went to {cert.construction}")
        certificates.append(cert)
    return ReplayResult(tag, summary, certificates)


def replay_s4_octahedral(config: RunConfig) -> ReplayResult:
    tag = "eq:relss4"
    group = SymmetricGroup(4)
    check = verify_octa(group, s4_sextuple().members)
    _expect(check.ok, tag, check.diagnosis.reason)
    laws = octa_consequences(group, check.family)
    return ReplayResult(tag, {"relations": check.diagnosis.checked, "fourth_power_laws": laws.laws_checked})


def replay_octa_square_cocycle(config: RunConfig) -> ReplayResult:
    tag = "obs:isoEVTocta"
    group = SymmetricGroup(8)
    result = sym_o2_8cycle(_representative(8, "8"))
    sigma = result.family.sigma[1]
    chi = Character((sigma,), (RootOfUnity.minus_one(),), name="χ(σ) = −1")
    report = octa_subspace_cocycle(group, result.family, chi, depth=config.word_depth)
    _expect(report.isomorphic, tag, "transported cocycle differs from the constant −1 cocycle")
    return ReplayResult(tag, {"space": report.cocycle.size, "isomorphic": report.isomorphic})


def replay_gl2_triple(config: RunConfig) -> ReplayResult:
    tag = "exa:gl2-triple"
    p, omega, c = 7, 2, 3
    fam = gl2_d3_family(p, omega, c)
    check = verify_dp(GeneralLinearGroup(2, p), fam.members, 3)
    _expect(check.ok, tag, check.diagnosis.reason)
    return ReplayResult(tag, {"p": p, "omega": omega, "c": c, "members": [str(x) for x in fam.members]})


def replay_gln(config: RunConfig) -> ReplayResult:
    tag = "prop:r2-gln"
    cert = classify_gl_class(7, [1, 6, 2, 4])
    _expect(cert.verdict is Verdict.INFINITE_WHEN_Q_MINUS_ONE, tag, cert.verdict.value)
    _expect(bool(cert.hypotheses and cert.hypotheses["chi_is_minus_one"]), tag, "χ(λ) != −1")
    group = group_from_spec(cert.group)
    fam = family_from_json(group, cert.witness)
    summary = {"class": cert.label, **_dp2_suites(group, fam)}
    return ReplayResult(tag, summary, [cert])


EXAMPLES: Dict[str, Callable[[RunConfig], ReplayResult]] = {
    "exa:12m": replay_12m,
    "co:type6k^nj": replay_split,
    "co:type2k^3": replay_three_even_cycles,
    "co:type2^3": replay_involution_plus,
    "co:type2n2:6": replay_six_transpositions,
    "ex:8-ciclo": replay_eight_cycle,
    "eq:relss4": replay_s4_octahedral,
    "obs:isoEVTocta": replay_octa_square_cocycle,
    "exa:gl2-triple": replay_gl2_triple,
    "prop:r2-gln": replay_gln,
}


def run_examples(selector: str, config: RunConfig) -> List[ReplayResult]:
    """
    Replay one tag or "all".

    Raises:
        InputError: On an unknown tag.
        DefectError: On the first failing replay.
    """
    if selector == "all":
        tags = list(EXAMPLES)
    elif selector in EXAMPLES:
        tags = [selector]
    else:
        raise InputError(f"Unknown example {selector!r}; known: all, {', '.join(EXAMPLES)}")
    results = []
    for tag in tags:
        logger.info(f"Replaying {tag}")
        results.append(EXAMPLES[tag](config))
    return results
