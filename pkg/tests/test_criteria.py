"""Tests for class dispatch, corollaries, certificates and re-verification."""

import copy
import json

import pytest

from rackit.braided import Character, RootOfUnity
from rackit.criteria import (
    LEMMA_ODD,
    Certificate,
    Verdict,
    certificate_from_json,
    certificate_to_json,
    class_from_json,
    classify_gl_class,
    classify_sym_class,
    conditional_theorem_report,
    corollary_dp,
    corollary_octa2,
    family_from_json,
    group_from_spec,
    lemma_odd_verdict,
    parse_group_spec,
    upgrade,
    verify_certificate,
)
from rackit.dtype import sym_d3_transposition_fixed, sym_d3sq_six_transpositions
from rackit.errors import InputError
from rackit.matgrp.group import diagonal_class_data
from rackit.perm import ops
from rackit.perm.group import SymmetricGroup

from conftest import representative


def sym_class(m, t):
    return ops.class_data(m, ops.parse_cycle_type(t, m))


def tampered(cert: Certificate, **changes) -> Certificate:
    data = copy.deepcopy(cert.to_dict())
    data.update(changes)
    return Certificate.from_dict(data)


class TestSymmetricDispatch:
    def test_identity(self):
        cert = classify_sym_class(4, "1^4")
        assert cert.verdict is Verdict.NO_CRITERION
        assert cert.construction == "identity"
        assert cert.flags["degenerate"]
        assert verify_certificate(cert)

    def test_odd_order(self):
        cert = classify_sym_class(5, "3,1^2")
        assert cert.verdict is Verdict.INFINITE_ALL_REPS
        assert cert.basis == (LEMMA_ODD,)
        assert cert.witness is None
        assert verify_certificate(cert)

    def test_transposition_with_fixed_point(self):
        cert = classify_sym_class(6, "3,2,1")
        assert cert.verdict is Verdict.INFINITE_ALL_REPS
        assert cert.construction == "exa:12m"
        assert cert.basis == ("exa:12m", "co:especial", "coro:dp-cor", LEMMA_ODD)
        assert cert.k == 5
        assert cert.witness["kind"] == "dp2"
        assert verify_certificate(cert)

    def test_split(self):
        cert = classify_sym_class(6, "6")
        assert cert.construction == "co:type6k^nj"
        assert cert.flags == {"j": 6, "p": 3}
        assert verify_certificate(cert)

    def test_three_even_cycles(self):
        cert = classify_sym_class(12, "4^3")
        assert cert.construction == "co:type2k^3"
        assert cert.flags["j"] == 4
        assert cert.k == 3
        assert verify_certificate(cert)

    def test_involution_plus(self):
        cert = classify_sym_class(9, "3,2^3")
        assert cert.construction == "co:type2^3"
        assert verify_certificate(cert)

    def test_six_transpositions(self):
        cert = classify_sym_class(12, "2^6")
        assert cert.verdict is Verdict.INFINITE_WHEN_Q_MINUS_ONE
        assert cert.construction == "co:type2n2:6"
        assert len(cert.extra_witnesses) == 1
        assert cert.hypotheses["theorem"] == "theorem:dp-cor"
        assert cert.notes
        assert verify_certificate(cert)

    def test_eight_cycle(self):
        cert = classify_sym_class(8, "8")
        assert cert.verdict is Verdict.INFINITE_ALL_REPS
        assert cert.construction == "ex:8-ciclo"
        assert cert.basis == ("ex:8-ciclo", "co:especial2", LEMMA_ODD)
        assert (cert.d, cert.e) == (3, 5)
        assert cert.flags["case"] == "I"
        assert verify_certificate(cert)

    def test_eight_cycle_with_remainder(self):
        cert = classify_sym_class(11, "8,3", search_budget=1)
        assert cert.verdict is Verdict.INFINITE_WHEN_Q_MINUS_ONE
        assert cert.construction == "ex:8-ciclo:remainder"
        assert cert.flags["sigma6_is_cube"] is False
        assert verify_certificate(cert)

    def test_transposition_has_no_criterion(self):
        cert = classify_sym_class(4, "2,1^2")
        assert cert.verdict is Verdict.NO_CRITERION
        assert cert.construction == "none"
        assert "search" not in cert.flags
        assert verify_certificate(cert)

    def test_exhausted_search(self):
        cert = classify_sym_class(4, "4")
        assert cert.verdict is Verdict.NO_CRITERION
        assert cert.flags["search"] == {"pairs": 5, "budget": 50_000, "exhausted": True}
        assert not cert.notes

    def test_degree_mismatch(self):
        with pytest.raises(InputError):
            classify_sym_class(6, "3,2")
        with pytest.raises(InputError):
            classify_sym_class(6, ops.parse_cycle_type("3,2"))


class TestGeneralLinear:
    def test_criterion_holds(self):
        cert = classify_gl_class(7, [1, 6, 2, 4])
        assert cert.group == "gl:4:7"
        assert cert.verdict is Verdict.INFINITE_WHEN_Q_MINUS_ONE
        assert cert.basis == ("exa:gl2-triple", "prop:r2-gln")
        assert cert.hypotheses["chi_is_minus_one"]
        assert cert.hypotheses["determinant"] == 6
        assert cert.hypotheses["twists_with_minus_one"] == [1, 3, 5]
        assert not cert.hypotheses["h_given"]
        assert verify_certificate(cert)

    def test_explicit_twist_without_minus_one(self):
        cert = classify_gl_class(7, [1, 6, 2, 4], h=2)
        assert cert.verdict is Verdict.NO_CRITERION
        assert cert.witness is not None
        assert cert.notes
        assert verify_certificate(cert)

    def test_no_cube_root(self):
        cert = classify_gl_class(5, [1, 4, 2, 3])
        assert cert.verdict is Verdict.NO_CRITERION
        assert cert.witness is None
        assert verify_certificate(cert)

    def test_singular_diagonal(self):
        with pytest.raises(InputError):
            classify_gl_class(7, [1, 0, 2, 4])

    def test_tampered_twists(self):
        cert = classify_gl_class(7, [1, 6, 2, 4])
        hypotheses = dict(cert.hypotheses, twists_with_minus_one=[1])
        assert not verify_certificate(tampered(cert, hypotheses=hypotheses))


class TestVerification:
    def test_tampered_class_size(self):
        cert = classify_sym_class(6, "3,2,1")
        info = dict(cert.class_info, size=cert.class_info["size"] + 1)
        assert not verify_certificate(tampered(cert, **{"class": info}))

    def test_tampered_exponent(self):
        cert = classify_sym_class(6, "3,2,1")
        assert not verify_certificate(tampered(cert, k=3))

    def test_tampered_power_identity(self):
        cert = classify_sym_class(8, "8")
        assert not verify_certificate(tampered(cert, d=5))

    def test_overlapping_witness(self):
        cert = classify_sym_class(6, "3,2,1")
        witness = dict(cert.witness, nu=cert.witness["mu"])
        assert not verify_certificate(tampered(cert, witness=witness))

    def test_conditional_verdict_cannot_be_upgraded(self):
        cert = classify_sym_class(12, "2^6")
        assert not verify_certificate(tampered(cert, verdict=Verdict.INFINITE_ALL_REPS.value))

    def test_lemma_odd_needs_odd_order(self):
        cert = classify_sym_class(5, "3,1^2")
        assert not verify_certificate(tampered(cert, verdict=Verdict.NO_CRITERION.value))
        forged = tampered(classify_sym_class(4, "2,1^2"), construction=LEMMA_ODD, verdict="InfiniteAllReps")
        assert not verify_certificate(forged)

    def test_unknown_group(self):
        cert = classify_sym_class(5, "3,1^2")
        assert not verify_certificate(tampered(cert, group="alt:5"))


class TestCertificateJson:
    def test_canonical_text_is_stable(self):
        cert = classify_sym_class(8, "8")
        text = certificate_to_json(cert)
        assert certificate_to_json(certificate_from_json(text)) == text
        assert list(json.loads(text)) == sorted(json.loads(text))
        assert ", " not in text and ": " not in text

    def test_rejects_other_schema(self):
        data = classify_sym_class(5, "3,1^2").to_dict()
        data["schema"] = "0"
        with pytest.raises(InputError):
            Certificate.from_dict(data)
        with pytest.raises(InputError):
            certificate_from_json("[1, 2]")
        with pytest.raises(InputError):
            certificate_from_json("{")

    def test_label(self):
        assert classify_gl_class(7, [1, 6, 2, 4]).label == "diag(1,6,2,4)"
        assert classify_sym_class(6, "6").label == str(ops.parse_cycle_type("6", 6))


class TestCorollaries:
    def test_lemma_odd(self):
        assert lemma_odd_verdict(sym_class(5, "3,1^2")) is Verdict.INFINITE_ALL_REPS
        assert lemma_odd_verdict(sym_class(4, "2,1^2")) is Verdict.NO_CRITERION
        assert lemma_odd_verdict(sym_class(4, "1^4")) is Verdict.NO_CRITERION
        assert lemma_odd_verdict(diagonal_class_data(7, [2, 2])) is Verdict.NO_CRITERION

    def test_upgrade(self):
        assert upgrade(sym_class(4, "4")) is Verdict.INFINITE_ALL_REPS
        assert upgrade(diagonal_class_data(7, [2, 2, 1, 6])) is Verdict.INFINITE_WHEN_Q_MINUS_ONE

    def test_corollary_dp_rejects_even_exponent(self, s6):
        c = sym_class(6, "3,2,1")
        fam = sym_d3_transposition_fixed(c.representative)
        with pytest.raises(InputError):
            corollary_dp(s6, c, fam, 2, "exa:12m")

    def test_corollary_dp_rejects_foreign_class(self, s6):
        fam = sym_d3_transposition_fixed(representative(6, "3,2,1"))
        with pytest.raises(InputError):
            corollary_dp(s6, sym_class(6, "6"), fam, 5, "exa:12m")

    def test_corollary_octa2_power_identities(self, s8, eight_cycle):
        c = sym_class(8, "8")
        cert = corollary_octa2(s8, c, eight_cycle.family, 3, 5, "ex:8-ciclo")
        assert cert.basis == ("co:especial2", LEMMA_ODD)
        with pytest.raises(InputError):
            corollary_octa2(s8, c, eight_cycle.family, 5, 5, "ex:8-ciclo")

    def test_symbolic_hypotheses(self):
        group = SymmetricGroup(12)
        fam = sym_d3sq_six_transpositions(representative(12, "2^6"))
        report = conditional_theorem_report(group, fam)
        assert report.theorem == "theorem:dp-cor"
        assert [h.name for h in report.hypotheses] == ["H1", "H2", "H3", "H4a", "H4b"]
        assert report.symbolic
        assert report.all_hold is None
        assert report.verdict is Verdict.INFINITE_WHEN_Q_MINUS_ONE

    def test_character_on_eight_cycle(self, s8, eight_cycle):
        sigma = eight_cycle.family.sigma[1]
        chi = Character((sigma,), (RootOfUnity.minus_one(),), name="minus")
        report = conditional_theorem_report(s8, eight_cycle.family, chi)
        assert report.theorem == "teor:aplicAHSch2"
        assert report.all_hold is True
        assert report.character == "minus"

    def test_trivial_character_fails(self, s8, eight_cycle):
        sigma = eight_cycle.family.sigma[1]
        chi = Character((sigma,), (RootOfUnity.one(),))
        report = conditional_theorem_report(s8, eight_cycle.family, chi)
        assert report.failing == ["H3", "H4", "H5", "H6", "H7"]
        assert report.verdict is Verdict.NO_CRITERION


class TestCodec:
    def test_group_specs(self):
        assert parse_group_spec("gl:4:7") == ("gl", (4, 7))
        assert parse_group_spec("sym:8") == ("sym", (8,))
        assert group_from_spec("gl:2:7").spec == "gl:2:7"
        for bad in ("sym:x", "alt:5", "gl:4"):
            with pytest.raises(InputError):
                parse_group_spec(bad)

    def test_class_dimension_mismatch(self):
        with pytest.raises(InputError):
            class_from_json(group_from_spec("gl:3:7"), {"diagonal": [1, 6]})

    def test_unknown_family_kind(self):
        with pytest.raises(InputError):
            family_from_json(SymmetricGroup(4), {"kind": "cube"})
        with pytest.raises(InputError):
            family_from_json(SymmetricGroup(4), {"kind": "octa", "sigma": [[1, 2, 3, 4]]})
