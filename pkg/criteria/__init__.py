"""Classification criteria, certificates and their re-verification."""

from rackit.criteria.classify import DEFAULT_SEARCH_BUDGET, classify_gl_class, classify_sym_class
from rackit.criteria.codec import (
    class_from_json,
    class_to_json,
    family_from_json,
    family_to_json,
    group_from_spec,
    in_class,
    parse_group_spec,
)
from rackit.criteria.corollaries import (
    LEMMA_ODD,
    conditional_theorem_report,
    corollary_dp,
    corollary_octa2,
    lemma_odd_verdict,
    upgrade,
)
from rackit.criteria.types import (
    SCHEMA_VERSION,
    Certificate,
    CharacterReport,
    HypothesisCheck,
    Verdict,
    certificate_from_json,
    certificate_to_json,
)
from rackit.criteria.verify import verify_certificate

__all__ = [
    "DEFAULT_SEARCH_BUDGET",
    "classify_gl_class",
    "classify_sym_class",
    "class_from_json",
    "class_to_json",
    "family_from_json",
    "family_to_json",
    "group_from_spec",
    "in_class",
    "parse_group_spec",
    "LEMMA_ODD",
    "conditional_theorem_report",
    "corollary_dp",
    "corollary_octa2",
    "lemma_odd_verdict",
    "upgrade",
    "SCHEMA_VERSION",
    "Certificate",
    "CharacterReport",
    "HypothesisCheck",
    "Verdict",
    "certificate_from_json",
    "certificate_to_json",
    "verify_certificate",
]
