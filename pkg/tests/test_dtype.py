"""Tests for D_p / D_p^(2) verification, derived laws and constructions."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rackit.dtype import (
    DpFamily,
    central_shift,
    d3_characterize,
    dp2_consequences,
    dp_transporters,
    enumerate_d3_pairs,
    extend_dp_seed,
    nine_identity_d3sq,
    power_companion,
    sym_d3_involution_plus,
    sym_d3_three_even_cycles,
    sym_d3_transposition_fixed,
    sym_d3sq_six_transpositions,
    sym_dp2_split,
    transporter_cocycle_report,
    verify_dp,
    verify_dp2,
    verify_dp2_members,
)
from rackit.dtype.types import Dp2Family
from rackit.errors import InputError
from rackit.groups.dihedral import DihedralElement, DihedralGroup
from rackit.perm import ops
from rackit.perm.group import SymmetricGroup
from rackit.perm.types import Permutation

from conftest import representative

D10 = DihedralGroup(10)


def reflections(group, step, offset, count):
    return [DihedralElement((step * i + offset) % group.n, 1) for i in range(count)]


class TestVerifyDp:
    @given(st.sampled_from([3, 5, 7, 9]))
    def test_reflections_of_dihedral_group(self, p):
        group = DihedralGroup(p)
        check = verify_dp(group, reflections(group, 1, 0, p), p)
        assert check.ok
        assert check.diagnosis.checked == p * p

    def test_duplicate_members(self):
        group = DihedralGroup(3)
        x = group.x
        check = verify_dp(group, [x, x, DihedralElement(1, 1)], 3)
        assert not check.ok
        assert check.diagnosis.witness == (0, 1)

    def test_failing_relation(self, s4):
        members = [ops.parse_permutation(t, 4) for t in ("(1 2)", "(3 4)", "(1 3)")]
        check = verify_dp(s4, members, 3)
        assert not check.ok
        assert check.diagnosis.witness == (0, 1)

    def test_member_count(self):
        with pytest.raises(InputError):
            verify_dp(DihedralGroup(3), [DihedralGroup(3).x], 3)

    def test_extend_seed(self):
        group = DihedralGroup(5)
        check = extend_dp_seed(group, DihedralElement(0, 1), DihedralElement(1, 1), 5)
        assert check.ok
        assert check.family[2] == DihedralElement(2, 1)
        with pytest.raises(InputError):
            extend_dp_seed(group, group.x, group.x, 5)

    def test_extend_seed_collision(self):
        group = DihedralGroup(3)
        check = extend_dp_seed(group, DihedralElement(0, 1), DihedralElement(1, 1), 5)
        assert not check.ok

    def test_d3_characterization(self):
        group = DihedralGroup(3)
        check = d3_characterize(group, group.x, DihedralElement(1, 1))
        assert check.ok
        assert check.family.members == (group.x, DihedralElement(2, 1), DihedralElement(1, 1))

    def test_d3_characterization_commuting(self, s4):
        a = ops.parse_permutation("(1 2)", 4)
        b = ops.parse_permutation("(3 4)", 4)
        check = d3_characterize(s4, a, b)
        assert not check.ok
        assert check.diagnosis.witness == (1,)
        with pytest.raises(InputError):
            d3_characterize(s4, a, a)


class TestVerifyDp2:
    def test_even_and_odd_reflections(self):
        mu = DpFamily(5, tuple(reflections(D10, 2, 0, 5)))
        nu = DpFamily(5, tuple(reflections(D10, 2, 5, 5)))
        check = verify_dp2(D10, mu, nu)
        assert check.ok
        assert check.diagnosis.checked == 2 * 25

    def test_consequences(self):
        fam = verify_dp2_members(D10, reflections(D10, 2, 0, 5), reflections(D10, 2, 5, 5), 5).family
        laws = dp2_consequences(D10, fam)
        assert laws.mu_square == D10.identity
        assert laws.mu_nu == DihedralElement(5, 0)
        assert laws.nu_mu == DihedralElement(5, 0)
        assert laws.laws_checked > 0

    def test_consequences_need_odd_p(self, s4):
        a = ops.parse_permutation("(1 2)", 4)
        b = ops.parse_permutation("(3 4)", 4)
        fam = Dp2Family(DpFamily(2, (a, b)), DpFamily(2, (b, a)))
        with pytest.raises(InputError):
            dp2_consequences(s4, fam)

    def test_overlap(self):
        mu = DpFamily(5, tuple(reflections(D10, 2, 0, 5)))
        check = verify_dp2(D10, mu, mu)
        assert not check.ok
        assert check.diagnosis.witness == (0, 0)

    def test_wrong_transporter(self):
        mu = DpFamily(5, tuple(reflections(D10, 2, 0, 5)))
        nu = DpFamily(5, tuple(reflections(D10, 2, 5, 5)))
        check = verify_dp2(D10, mu, nu, g_inf=D10.identity)
        assert not check.ok
        assert check.diagnosis.witness == ("g_inf",)

    def test_central_shift(self):
        fam = verify_dp(D10, reflections(D10, 2, 0, 5), 5).family
        shifted = central_shift(D10, fam, DihedralElement(5, 0))
        assert shifted.members == tuple(reflections(D10, 2, 5, 5))
        with pytest.raises(InputError):
            central_shift(D10, fam, D10.y)


class TestSymmetricConstructions:
    def test_transposition_fixed(self, s6):
        sigma = representative(6, "3,2,1")
        fam = sym_d3_transposition_fixed(sigma)
        assert all(ops.cycle_type(x) == ops.cycle_type(sigma) for x in fam)
        with pytest.raises(InputError):
            sym_d3_transposition_fixed(representative(6, "3,3"))

    def test_three_even_cycles(self):
        sigma = representative(12, "4^3")
        fam = sym_d3_three_even_cycles(sigma, 4)
        assert fam[0] == sigma
        assert verify_dp(SymmetricGroup(12), fam.members, 3).ok
        with pytest.raises(InputError):
            sym_d3_three_even_cycles(sigma, 3)
        with pytest.raises(InputError):
            sym_d3_three_even_cycles(representative(8, "4^2"), 4)

    def test_involution_plus(self):
        sigma = representative(9, "3,2^3")
        fam = sym_d3_involution_plus(sigma)
        assert fam[0] == sigma
        with pytest.raises(InputError):
            sym_d3_involution_plus(representative(6, "2^3"))

    @pytest.mark.parametrize("variant", ["plain", "bar"])
    def test_six_transpositions(self, variant):
        sigma = representative(12, "2^6")
        fam = sym_d3sq_six_transpositions(sigma, variant)
        g = fam.g_inf
        assert g * g == Permutation.identity(12)
        assert ops.conjugate(g, fam.mu[0]) == fam.nu[0]
        assert all(ops.cycle_type(x) == ops.cycle_type(sigma) for x in fam.members)

    def test_six_transpositions_unknown_variant(self):
        with pytest.raises(InputError):
            sym_d3sq_six_transpositions(representative(12, "2^6"), "hat")

    def test_split(self):
        sigma = representative(6, "6")
        fam = sym_dp2_split(sigma, 6, 3)
        assert fam.mu[0] == sigma
        assert fam.nu.members == tuple(x.inverse() for x in fam.mu.members)
        assert ops.conjugate(fam.g_inf, sigma) == sigma.inverse()

    def test_split_rejects(self):
        sigma = representative(8, "4^2")
        with pytest.raises(InputError):
            sym_dp2_split(sigma, 4, 2)
        with pytest.raises(InputError):
            sym_dp2_split(representative(6, "6"), 6, 2)

    def test_nine_identities(self):
        fam = sym_d3sq_six_transpositions(representative(12, "2^6"))
        group = SymmetricGroup(12)
        assert nine_identity_d3sq(group, fam.mu.members, fam.nu.members).ok
        reordered = nine_identity_d3sq(group, fam.mu.members, fam.nu.members[::-1])
        assert not reordered.ok
        assert reordered.diagnosis.witness == ("(st111)",)
        with pytest.raises(InputError):
            nine_identity_d3sq(group, fam.mu.members, fam.mu.members)


class TestCompanionsAndTransporters:
    def test_power_companion_with_inverse(self, s6):
        fam = sym_d3_transposition_fixed(representative(6, "3,2,1"))
        companion = power_companion(s6, fam, 5)
        assert companion.nu.members == tuple(x.inverse() for x in fam)
        assert ops.conjugate(companion.g_inf, fam[0]) == companion.nu[0]

    def test_power_companion_rejects(self, s6):
        fam = sym_d3_transposition_fixed(representative(6, "3,2,1"))
        for k in (2, 7, 3):
            with pytest.raises(InputError):
                power_companion(s6, fam, k)

    def test_transporters(self):
        fam = sym_dp2_split(representative(6, "6"), 6, 3)
        group = SymmetricGroup(6)
        tr = dp_transporters(group, fam)
        assert tr.g[0] == fam.mu[0]
        report = transporter_cocycle_report(group, fam)
        assert report.alpha == fam.mu[0]
        assert report.gamma == fam.nu[0]
        assert report.delta == fam.mu[0]

    def test_transporters_need_g_inf(self):
        fam = verify_dp2_members(D10, reflections(D10, 2, 0, 5), reflections(D10, 2, 5, 5), 5).family
        with pytest.raises(InputError):
            dp_transporters(D10, fam)


class TestGenericSearch:
    def test_finds_transpositions(self, s4):
        rep = ops.parse_permutation("(1 2)", 4)
        result = enumerate_d3_pairs(s4, rep, ops.iter_conjugates(rep), budget=10)
        assert result.found
        assert result.pairs_checked >= 1
        assert result.family[0] == rep

    def test_exhausts_commuting_class(self, s4):
        rep = representative(4, "2^2")
        result = enumerate_d3_pairs(s4, rep, ops.iter_conjugates(rep), budget=10)
        assert not result.found
        assert result.exhausted
        assert result.pairs_checked == 2

    def test_budget(self, s4):
        rep = representative(4, "2^2")
        result = enumerate_d3_pairs(s4, rep, ops.iter_conjugates(rep), budget=1)
        assert not result.exhausted
        assert result.pairs_checked == 1
        with pytest.raises(InputError):
            enumerate_d3_pairs(s4, rep, ops.iter_conjugates(rep), budget=0)


S12 = SymmetricGroup(12)
TRANSPOSITIONS_12 = [Permutation.from_cycles(12, [(i, j)]) for i in range(1, 13) for j in range(i + 1, 13)]
perms12 = st.permutations(list(range(1, 13))).map(lambda xs: Permutation(tuple(xs)))
SIX_TRANSPOSITIONS = sym_d3sq_six_transpositions(representative(12, "2^6"))


@st.composite
def six_member_candidates(draw):
    """Conjugated, shuffled and partly replaced copies of the six-transposition family."""
    g = draw(perms12)
    members = [S12.conjugate(g, x) for x in SIX_TRANSPOSITIONS.mu.members + SIX_TRANSPOSITIONS.nu.members]
    order = draw(st.permutations(range(6)))
    members = [members[i] for i in order]
    for _ in range(draw(st.integers(0, 2))):
        slot = draw(st.integers(0, 5))
        other = draw(st.sampled_from(TRANSPOSITIONS_12))
        if other not in members:
            members[slot] = other
    return members


class TestReducedChecksAgainstFullChecks:
    @pytest.mark.parametrize("t", ["1^2,2", "4"])
    def test_d3_characterization_over_s4_class(self, s4, t):
        rep = representative(4, t)
        elements = list(ops.iter_conjugates(rep))
        pairs = positives = 0
        for s1 in elements:
            for s2 in elements:
                if s1 == s2:
                    continue
                reduced = d3_characterize(s4, s1, s2)
                full = verify_dp(s4, (s1, s4.conjugate(s1, s2), s2), 3)
                assert reduced.ok == full.ok
                pairs += 1
                positives += reduced.ok
        assert pairs == len(elements) * (len(elements) - 1)
        if t == "1^2,2":
            assert positives == 24

    @settings(max_examples=500)
    @given(six_member_candidates())
    def test_nine_identities_never_accept_a_failing_family(self, members):
        sigmas, taus = members[:3], members[3:]
        reduced = nine_identity_d3sq(S12, sigmas, taus)
        assert not reduced.ok or verify_dp2_members(S12, sigmas, taus, 3).ok

    def test_nine_identities_accept_conjugates(self):
        fam = sym_d3sq_six_transpositions(representative(12, "2^6"))
        g = Permutation.from_cycles(12, [(1, 5, 9, 12), (2, 7)])
        sigmas = [S12.conjugate(g, x) for x in fam.mu.members]
        taus = [S12.conjugate(g, x) for x in fam.nu.members]
        assert nine_identity_d3sq(S12, sigmas, taus).ok
        assert verify_dp2_members(S12, sigmas, taus, 3).ok
