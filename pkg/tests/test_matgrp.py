"""Tests for GF(p) matrices, GL(n, p) and the GL(N) sextuples."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rackit.dtype.verify import verify_dp, verify_dp2_members
from rackit.errors import BudgetExceeded, InputError
from rackit.matgrp import ops
from rackit.matgrp.families import gl2_d3_family, gln_d3sq_family, gln_r2_criterion, normalize_diagonal
from rackit.matgrp.group import GeneralLinearGroup, diagonal_class_data, gl_order
from rackit.matgrp.types import PrimeFieldMatrix

J = PrimeFieldMatrix(7, ((0, 1), (6, 0)))


class TestPrimeFieldMatrix:
    def test_entries_reduced(self):
        assert PrimeFieldMatrix(7, ((8, -1), (14, 3))).rows == ((1, 6), (0, 3))

    def test_rejects_non_square(self):
        with pytest.raises(InputError):
            PrimeFieldMatrix(7, ((1, 2),))

    def test_json(self):
        assert PrimeFieldMatrix.from_json(J.to_json()) == J
        with pytest.raises(InputError):
            PrimeFieldMatrix.from_json({"p": 7, "n": 3, "rows": [[0, 1], [6, 0]]})
        with pytest.raises(InputError):
            PrimeFieldMatrix.from_json({"rows": [[1]]})

    def test_str(self):
        assert str(J) == "[0 1; 6 0]"


class TestArithmetic:
    def test_product_and_inverse(self):
        assert ops.mat_mul(J, J) == ops.diagonal_matrix(7, [6, 6])
        assert ops.mat_mul(J, ops.mat_inv(J)) == ops.identity_matrix(7, 2)

    def test_det(self):
        assert ops.mat_det(J) == 1
        assert ops.mat_det(ops.diagonal_matrix(7, [1, 6, 2, 4])) == 6

    def test_singular_inverse(self):
        with pytest.raises(InputError):
            ops.mat_inv(PrimeFieldMatrix(5, ((1, 2), (2, 4))))

    def test_negative_power(self):
        assert ops.mat_pow(J, -1) == ops.mat_inv(J)
        assert ops.mat_pow(J, 4) == ops.identity_matrix(7, 2)

    def test_block_diagonal(self):
        block = ops.block_diagonal(J, ops.diagonal_matrix(7, [2]))
        assert block.rows == ((0, 1, 0), (6, 0, 0), (0, 0, 2))

    def test_field_requires_prime(self):
        with pytest.raises(InputError):
            ops.field(9)


class TestDeterminantCharacter:
    def test_default_generator(self):
        chi = ops.det_character(7, h=1)
        assert chi.generator == 3

    def test_value_of_non_square_determinant(self):
        chi = ops.det_character(7, h=1)
        assert ops.det_char_value(chi, ops.diagonal_matrix(7, [1, 6, 2, 4])) == 3

    def test_rejects_non_generator(self):
        with pytest.raises(InputError):
            ops.det_character(7, h=1, generator=2)

    def test_p2(self):
        with pytest.raises(InputError):
            ops.det_char_value(ops.DetCharacter(2, 1, 1), ops.identity_matrix(2, 2))

    def test_cube_roots(self):
        assert ops.primitive_cube_root(7) == 2
        assert ops.primitive_cube_root(13) == 3
        with pytest.raises(InputError):
            ops.primitive_cube_root(5)


class TestGeneralLinearGroup:
    def test_orders(self):
        assert gl_order(2, 7) == 2016
        assert GeneralLinearGroup(2, 7).order(J) == 4

    def test_contains(self):
        group = GeneralLinearGroup(2, 5)
        assert group.contains(ops.identity_matrix(5, 2))
        assert not group.contains(PrimeFieldMatrix(5, ((1, 2), (2, 4))))
        assert not group.contains(ops.identity_matrix(7, 2))

    def test_element_from_json_rejects_singular(self):
        with pytest.raises(InputError):
            GeneralLinearGroup(2, 5).element_from_json({"p": 5, "rows": [[1, 2], [2, 4]]})

    def test_find_conjugator(self):
        group = GeneralLinearGroup(2, 3)
        a = ops.diagonal_matrix(3, [1, 2])
        b = ops.diagonal_matrix(3, [2, 1])
        g = group.find_conjugator(a, b)
        assert g is not None and group.conjugate(g, a) == b
        assert group.find_conjugator(a, ops.identity_matrix(3, 2)) is None

    def test_conjugator_search_budget(self):
        group = GeneralLinearGroup(3, 7)
        with pytest.raises(BudgetExceeded):
            group.find_conjugator(group.identity, group.identity)


class TestDiagonalClasses:
    def test_class_data(self):
        c = diagonal_class_data(7, [1, 6, 2, 4])
        assert c.element_order == 6
        assert c.is_real
        assert c.size == gl_order(4, 7) // 6 ** 4
        assert c.label == "diag(1,6,2,4)"
        assert c.group_spec == "gl:4:7"

    def test_not_real(self):
        assert not diagonal_class_data(7, [2, 2, 1, 6]).is_real

    def test_singular_diagonal(self):
        with pytest.raises(InputError):
            diagonal_class_data(7, [1, 0])

    def test_membership_by_rank(self):
        mu = PrimeFieldMatrix(7, ((0, 1), (1, 0)))
        assert ops.in_diagonal_class(mu, [1, 6])
        assert not ops.in_diagonal_class(ops.identity_matrix(7, 2), [1, 6])
        assert not ops.in_diagonal_class(PrimeFieldMatrix(7, ((1, 1), (0, 1))), [1, 1])


class TestFamilies:
    def test_gl2_triple(self):
        fam = gl2_d3_family(7, 2, 3)
        group = GeneralLinearGroup(2, 7)
        assert verify_dp(group, fam.members, 3).ok
        for mu in fam.members:
            assert group.mul(mu, mu) == ops.diagonal_matrix(7, [3, 3])

    def test_gl2_triple_needs_cube_root(self):
        with pytest.raises(InputError):
            gl2_d3_family(7, 3, 1)
        with pytest.raises(InputError):
            gl2_d3_family(7, 2, 0)

    def test_normalize(self):
        assert normalize_diagonal(7, [2, 1, 6, 4]) == (1, 6, 2, 4)
        with pytest.raises(InputError):
            normalize_diagonal(7, [1, 6, 2, 2])
        with pytest.raises(InputError):
            normalize_diagonal(7, [1, 6, 2])

    def test_sextuple(self):
        fam = gln_d3sq_family(7, 2, [1, 6, 2, 4])
        group = GeneralLinearGroup(4, 7)
        check = verify_dp2_members(group, fam.mu.members, fam.nu.members, 3, fam.g_inf)
        assert check.ok
        assert all(ops.in_diagonal_class(x, [1, 6, 2, 4]) for x in fam.members)

    def test_sextuple_swaps_equal_entries(self):
        fam = gln_d3sq_family(7, 2, [1, 6, 2, 2, 4])
        assert fam.g_inf is not None

    def test_criterion_report(self):
        report, fam = gln_r2_criterion(7, [1, 6, 2, 4])
        assert report.determinant == 6
        assert report.chi_exponent == 3
        assert report.chi_is_minus_one
        assert report.twists_with_minus_one == [1, 3, 5]
        assert report.omega == 2
        assert all(report.hypotheses.values())

    def test_criterion_with_square_determinant(self):
        report, _ = gln_r2_criterion(7, [1, 6, 2, 3])
        assert report.determinant == 1
        assert not report.chi_is_minus_one
        assert report.twists_with_minus_one == []

    def test_criterion_needs_cube_root(self):
        with pytest.raises(InputError):
            gln_r2_criterion(5, [1, 4, 2, 3])


def invertible_matrices(p, n):
    entries = st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n), min_size=n, max_size=n)
    return entries.map(lambda rows: PrimeFieldMatrix(p, tuple(map(tuple, rows)))).filter(ops.is_invertible)


gl3_7 = invertible_matrices(7, 3)


class TestDetCharacterLaws:
    @settings(max_examples=100)
    @given(gl3_7, gl3_7, st.integers(0, 5))
    def test_multiplicative(self, a, b, h):
        chi = ops.det_character(7, h)
        product = ops.det_char_value(chi, ops.mat_mul(a, b))
        assert product == (ops.det_char_value(chi, a) + ops.det_char_value(chi, b)) % 6

    @settings(max_examples=50)
    @given(gl3_7, gl3_7)
    def test_class_function(self, a, g):
        chi = ops.det_character(7, 3)
        conjugated = ops.mat_mul(ops.mat_mul(g, a), ops.mat_inv(g))
        assert ops.det_char_value(chi, conjugated) == ops.det_char_value(chi, a)
