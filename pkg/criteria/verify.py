"""Independent re-verification of certificates.

Only the group spec, the class and the witness values are trusted as
data; every relation, membership and power identity is recomputed.
"""

import logging
from typing import Any, Dict

from rackit.criteria.codec import (
    AnyClass,
    class_from_json,
    class_to_json,
    family_from_json,
    group_from_spec,
    in_class,
)
from rackit.criteria.corollaries import LEMMA_ODD, lemma_odd_verdict, upgrade
from rackit.criteria.types import Certificate, Verdict
from rackit.dtype.symmetric import is_odd_prime
from rackit.dtype.types import Dp2Family, DpFamily
from rackit.dtype.verify import verify_dp, verify_dp2_members
from rackit.errors import RackitError
from rackit.groups.base import BaseGroup
from rackit.matgrp.families import gln_r2_criterion
from rackit.matgrp.group import GeneralLinearGroup
from rackit.otype.types import Octa2Family, OctaFamily
from rackit.otype.verify import verify_octa, verify_octa2

logger = logging.getLogger(__name__)

_CONDITIONAL_CONSTRUCTIONS = ("co:type2n2:6", "ex:8-ciclo:remainder")


def _check_witness(group: BaseGroup, c: AnyClass, data: Dict[str, Any]) -> Any:
    fam = family_from_json(group, data)
    if isinstance(fam, Dp2Family):
        if fam.g_inf is None:
            return None
        check = verify_dp2_members(group, fam.mu.members, fam.nu.members, fam.p, fam.g_inf)
    elif isinstance(fam, Octa2Family):
        if fam.g is None:
            return None
        check = verify_octa2(group, fam.sigma.members, fam.tau.members, fam.g)
    elif isinstance(fam, OctaFamily):
        check = verify_octa(group, fam.members)
    elif isinstance(fam, DpFamily):
        check = verify_dp(group, fam.members, fam.p)
    else:
        return None
    if not check.ok:
        logger.debug(f"Witness fails: {check.diagnosis.reason}")
        return None
    if not all(in_class(c, x) for x in fam.members):
        logger.debug("Witness member outside the class")
        return None
    return fam


def _check_k(group: BaseGroup, fam: Any, k: Any) -> bool:
    if not isinstance(fam, Dp2Family) or not isinstance(k, int) or k % 2 == 0:
        return False
    if not is_odd_prime(fam.p):
        return False
    mu0 = fam.mu[0]
    if group.power(mu0, k) == mu0:
        return False
    return all(group.power(m, k) == n for m, n in zip(fam.mu.members, fam.nu.members))


def _check_de(group: BaseGroup, fam: Any, d: Any, e: Any) -> bool:
    if not isinstance(fam, Octa2Family) or not isinstance(d, int) or not isinstance(e, int):
        return False
    s1 = fam.sigma[1]
    return group.power(s1, d) == fam.sigma[6] and group.power(s1, e) == fam.tau[1]


def _check_gl(group: GeneralLinearGroup, c: AnyClass, cert: Certificate) -> bool:
    hyp = cert.hypotheses or {}
    report, _ = gln_r2_criterion(group.p, c.diagonal, int(hyp["h"]), int(hyp["generator"]))
    if report.chi_exponent != hyp.get("chi_exponent"):
        return False
    if list(report.twists_with_minus_one) != list(hyp.get("twists_with_minus_one", [])):
        return False
    expected = Verdict.INFINITE_WHEN_Q_MINUS_ONE
    if hyp.get("h_given") and not report.chi_is_minus_one:
        expected = Verdict.NO_CRITERION
    return cert.verdict is expected


def _verify(cert: Certificate) -> bool:
    group = group_from_spec(cert.group)
    c = class_from_json(group, cert.class_info)
    if class_to_json(c) != cert.class_info:
        logger.debug("Recorded class data differ from the recomputed class")
        return False
    if cert.verdict is Verdict.INFINITE_ALL_REPS and not c.is_real:
        return False

    if cert.witness is None:
        if cert.construction == LEMMA_ODD:
            return cert.verdict is lemma_odd_verdict(c) is Verdict.INFINITE_ALL_REPS
        return cert.verdict is Verdict.NO_CRITERION

    witnesses = (cert.witness,) + tuple(cert.extra_witnesses)
    families = [_check_witness(group, c, w) for w in witnesses]
    if any(f is None for f in families):
        return False
    fam = families[0]

    if isinstance(group, GeneralLinearGroup):
        return _check_gl(group, c, cert)
    if cert.k is not None:
        return _check_k(group, fam, cert.k) and cert.verdict is upgrade(c)
    if cert.d is not None or cert.e is not None:
        return _check_de(group, fam, cert.d, cert.e) and cert.verdict is upgrade(c)
    if cert.construction in _CONDITIONAL_CONSTRUCTIONS:
        return cert.verdict is Verdict.INFINITE_WHEN_Q_MINUS_ONE
    return False


def verify_certificate(cert: Certificate) -> bool:
    """
    Re-check a certificate from its data alone.

    Rebuilds the group and class, checks the recorded class data, every
    witness relation and transporter, class membership of all members,
    the exponents k (ν = μ^k, μ_0^k ≠ μ_0, k odd) or d, e (σ_6 = σ_1^d,
    τ_1 = σ_1^e), and that the verdict follows from the construction.

    Returns:
        False on any failed check or malformed data; never raises for
        certificate content.
    """
    try:
        ok = _verify(cert)
    except (RackitError, KeyError, ValueError, TypeError, IndexError) as e:
        logger.debug(f"Certificate {cert.group} {cert.label} rejected: {e}")
        return False
    if not ok:
        logger.debug(f"Certificate {cert.group} {cert.label} rejected")
    return ok
