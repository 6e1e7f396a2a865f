"""Tests for octahedral families, the 8-cycle construction and the twist suite."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rackit.braided import Character, RootOfUnity
from rackit.errors import InputError
from rackit.otype import (
    Octa2Family,
    OctaFamily,
    conjugate_family,
    octa,
    octa_consequences,
    octa_from_reduced,
    octa_refutation_search,
    octa_subspace_cocycle,
    octa_transporter_suite,
    octa_transporters,
    s4_sextuple,
    sigma_tau_consequences,
    sym_o2_8cycle,
    verify_octa,
    verify_octa2,
)
from rackit.otype.symmetric import fourth_root_candidates
from rackit.perm import ops
from rackit.perm.group import SymmetricGroup
from rackit.perm.types import Permutation

from conftest import representative


class TestOctahedralFamilies:
    def test_table_lookup(self):
        assert octa(1, 2) == 5
        assert octa(2, 1) == 3
        assert octa(6, 6) == 6

    def test_s4_sextuple(self, s4, octa_s4):
        check = verify_octa(s4, octa_s4.members)
        assert check.ok
        assert check.diagnosis.checked == 36
        assert all(ops.cycle_type(x) == ops.parse_cycle_type("4", 4) for x in octa_s4)

    def test_fourth_powers(self, s4, octa_s4):
        laws = octa_consequences(s4, octa_s4)
        assert laws.fourth_power == s4.identity
        assert laws.product == s4.mul(octa_s4[1], octa_s4[6])
        assert laws.laws_checked == 11

    def test_swapped_members_fail(self, s4, octa_s4):
        members = list(octa_s4.members)
        members[0], members[1] = members[1], members[0]
        check = verify_octa(s4, members)
        assert not check.ok
        assert not octa_from_reduced(s4, members).ok

    def test_reduced_identities(self, s4, octa_s4):
        assert octa_from_reduced(s4, octa_s4.members).ok
        with pytest.raises(InputError):
            octa_from_reduced(s4, [octa_s4[1]] * 6)

    def test_duplicates(self, s4, octa_s4):
        members = list(octa_s4.members)
        members[5] = members[0]
        check = verify_octa(s4, members)
        assert check.diagnosis.witness == (1, 6)
        with pytest.raises(InputError):
            verify_octa(s4, members[:5])

    def test_indexing(self, octa_s4):
        with pytest.raises(IndexError):
            octa_s4[0]
        with pytest.raises(InputError):
            OctaFamily(octa_s4.members[:4])

    def test_conjugate_family(self, s4, octa_s4):
        g = ops.parse_permutation("(1 2)", 4)
        moved = conjugate_family(s4, octa_s4, g)
        assert verify_octa(s4, moved.members).ok
        assert moved[1] == s4.conjugate(g, octa_s4[1])


class TestEightCycle:
    def test_single_cycle(self, eight_cycle):
        sigma = representative(8, "8")
        assert eight_cycle.case == "I"
        assert eight_cycle.power_case
        assert eight_cycle.tau6_is_inverse
        fam = eight_cycle.family
        assert fam.sigma[1] == sigma
        assert fam.sigma[6] == ops.power(sigma, 3)
        assert fam.tau[1] == ops.power(sigma, 5)
        assert ops.conjugate(fam.g, fam.sigma[1]) == fam.tau[1]

    def test_two_cycles(self):
        result = sym_o2_8cycle(representative(16, "8^2"))
        assert result.case == "II"
        assert result.power_case

    def test_with_fixed_points_and_transpositions(self):
        result = sym_o2_8cycle(representative(12, "8,2^2"))
        assert result.power_case

    def test_rejects(self):
        with pytest.raises(InputError):
            sym_o2_8cycle(representative(8, "7,1"))
        with pytest.raises(InputError):
            sym_o2_8cycle(representative(11, "8,3"))

    def test_remainder(self):
        result = sym_o2_8cycle(representative(11, "8,3"), allow_remainder=True)
        assert not result.sigma6_is_cube
        assert not result.power_case
        assert result.alpha == ops.parse_permutation("(1 2 3)", 11)

    def test_sigma_tau_laws(self, eight_cycle):
        laws = sigma_tau_consequences(SymmetricGroup(8), eight_cycle.family)
        fam = eight_cycle.family
        assert laws.product == fam.sigma[1] * fam.tau[6]
        assert laws.laws_checked == 14

    def test_verify_rejects_wrong_transporter(self, s8, eight_cycle):
        fam = eight_cycle.family
        check = verify_octa2(s8, fam.sigma.members, fam.tau.members, s8.identity)
        assert not check.ok
        assert check.diagnosis.witness == ("g",)

    def test_verify_rejects_overlap(self, s8, eight_cycle):
        fam = eight_cycle.family
        check = verify_octa2(s8, fam.sigma.members, fam.sigma.members)
        assert not check.ok
        assert check.diagnosis.witness == (1, 7)


class TestTransporters:
    def test_transporters_hit_their_targets(self, s8, eight_cycle):
        fam = eight_cycle.family
        tr = octa_transporters(s8, fam)
        for j, target in enumerate(fam.members, start=1):
            assert s8.conjugate(tr[j], fam.sigma[1]) == target

    def test_needs_g(self, s8, eight_cycle):
        fam = eight_cycle.family
        with pytest.raises(InputError):
            octa_transporters(s8, Octa2Family(fam.sigma, fam.tau))

    def test_twist_suite(self, s8, eight_cycle):
        report = octa_transporter_suite(s8, eight_cycle.family)
        assert len(report.twists) == 144
        assert report.shape_counts == {"a": 36, "b": 36, "c": 36, "d": 36}
        assert report.all_odd
        assert report.power_case
        assert all(e % 2 for e in report.power_exponents)

    def test_transported_cocycle(self, s8, eight_cycle):
        sigma = eight_cycle.family.sigma[1]
        chi = Character((sigma,), (RootOfUnity.minus_one(),))
        report = octa_subspace_cocycle(s8, eight_cycle.family, chi)
        assert report.cocycle.size == 12
        assert report.isomorphic
        with pytest.raises(InputError):
            octa_subspace_cocycle(s8, eight_cycle.family, chi, copies=2)


class TestRefutationSearch:
    def test_candidates_share_the_fourth_power(self):
        sigma = Permutation(tuple(list(range(2, 9)) + [1]))
        candidates = list(fourth_root_candidates(8))
        assert len(candidates) == 6 * 2 ** 3
        assert all(ops.power(c, 4) == ops.power(sigma, 4) for c in candidates)
        assert sigma in candidates

    def test_eight_cycle_found(self):
        result = octa_refutation_search(8)
        assert result.found
        assert result.candidates == 48
        assert verify_octa(SymmetricGroup(8), result.family.members).ok

    def test_budget(self):
        result = octa_refutation_search(16, budget=3)
        assert not result.found
        assert not result.exhaustive
        assert result.scanned == 3

    def test_rejects(self):
        with pytest.raises(InputError):
            octa_refutation_search(12)
        with pytest.raises(InputError):
            octa_refutation_search(8, budget=0)

S4 = SymmetricGroup(4)
S4_ELEMENTS = [Permutation(tuple(xs)) for xs in itertools.permutations(range(1, 5))]


@st.composite
def sextuple_candidates(draw):
    """Reorderings of the 4-cycle class of S_4 with up to two members replaced."""
    members = list(draw(st.permutations(s4_sextuple().members)))
    for _ in range(draw(st.integers(0, 2))):
        slot = draw(st.integers(0, 5))
        other = draw(st.sampled_from(S4_ELEMENTS))
        if other not in members:
            members[slot] = other
    return members


class TestReducedAgainstFullOctaCheck:
    def test_every_ordering_of_the_four_cycles(self):
        positives = 0
        for members in itertools.permutations(s4_sextuple().members):
            reduced = octa_from_reduced(S4, members)
            assert reduced.ok == verify_octa(S4, members).ok
            positives += reduced.ok
        assert positives > 0

    @settings(max_examples=500)
    @given(sextuple_candidates())
    def test_reduced_never_accepts_a_failing_sextuple(self, members):
        reduced = octa_from_reduced(S4, members)
        assert not reduced.ok or verify_octa(S4, members).ok

    @given(st.sampled_from(S4_ELEMENTS))
    def test_conjugates_pass_both_checks(self, g):
        members = [S4.conjugate(g, x) for x in s4_sextuple().members]
        assert octa_from_reduced(S4, members).ok
        assert verify_octa(S4, members).ok
