"""Tests for permutations, cycle types and symmetric-group classes."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rackit.errors import InputError
from rackit.perm import ops
from rackit.perm.group import SymmetricGroup
from rackit.perm.types import CycleType, Permutation

perms6 = st.permutations(list(range(1, 7))).map(lambda xs: Permutation(tuple(xs)))
perms7 = st.permutations(list(range(1, 8))).map(lambda xs: Permutation(tuple(xs)))


class TestPermutation:
    def test_right_factor_applies_first(self):
        a = Permutation.from_cycles(3, [(1, 2)])
        b = Permutation.from_cycles(3, [(2, 3)])
        # (a * b)(2) = a(b(2)) = a(3) = 3
        assert (a * b)(2) == 3
        assert (a * b)(3) == 1

    def test_four_cycle_square(self):
        a = Permutation.from_cycles(4, [(1, 2, 3, 4)])
        assert a * a == Permutation.from_cycles(4, [(1, 3), (2, 4)])
        assert a(4) == 1

    def test_rejects_non_bijection(self):
        with pytest.raises(InputError):
            Permutation((1, 1, 2))

    def test_rejects_repeated_point(self):
        with pytest.raises(InputError):
            Permutation.from_cycles(4, [(1, 2), (2, 3)])

    def test_degree_mismatch(self):
        with pytest.raises(InputError):
            Permutation.identity(3) * Permutation.identity(4)

    def test_str_and_parse(self):
        a = ops.parse_permutation("(4 5)(1 2 3)", 6)
        assert str(a) == "(1 2 3)(4 5)"
        assert str(Permutation.identity(3)) == "()"
        assert ops.parse_permutation("()", 3).is_identity()

    def test_parse_rejects_garbage(self):
        with pytest.raises(InputError):
            ops.parse_permutation("(1 2", 4)
        with pytest.raises(InputError):
            ops.parse_permutation("(1 9)", 4)

    @given(perms6, perms6)
    def test_conjugate_matches_product(self, a, b):
        assert ops.conjugate(a, b) == a * b * a.inverse()

    @given(perms6, st.integers(-20, 20))
    def test_power_matches_repeated_product(self, a, k):
        expected = Permutation.identity(6)
        step = a if k >= 0 else a.inverse()
        for _ in range(abs(k)):
            expected = expected * step
        assert ops.power(a, k) == expected

    @given(perms7, perms7)
    @settings(max_examples=200)
    def test_conjugation_preserves_cycle_type(self, a, b):
        assert ops.cycle_type(ops.conjugate(a, b)) == ops.cycle_type(b)


class TestCycleType:
    def test_parse_caret_syntax(self):
        t = ops.parse_cycle_type("1^2,2^1,3^1", 7)
        assert t.n(1) == 2 and t.n(2) == 1 and t.n(3) == 1
        assert str(t) == "3,2,1^2"
        assert ops.parse_cycle_type("3,2,1^2") == t

    def test_parse_rejects_wrong_degree(self):
        with pytest.raises(InputError):
            ops.parse_cycle_type("3,2", 6)

    def test_parse_rejects_malformed(self):
        with pytest.raises(InputError):
            ops.parse_cycle_type("3,x", 6)

    def test_order_is_lcm(self):
        assert ops.parse_cycle_type("4,3,2").order == 12
        assert ops.parse_cycle_type("1^5").order == 1

    def test_parts_sum_to_degree(self):
        with pytest.raises(InputError):
            CycleType(5, ((2, 1),))

    @pytest.mark.parametrize("m,count", [(4, 5), (5, 7), (6, 11), (8, 22)])
    def test_partition_counts(self, m, count):
        assert len(list(ops.iter_cycle_types(m))) == count


class TestClasses:
    def test_canonical_representative(self):
        t = ops.parse_cycle_type("1,2,3", 6)
        assert ops.canonical_representative(t) == ops.parse_permutation("(2 3)(4 5 6)", 6)

    @pytest.mark.parametrize("text,m,size", [
        ("2,1^3", 5, 10),
        ("3,2,1", 6, 120),
        ("8", 8, 5040),
        ("2^6", 12, 10395),
    ])
    def test_class_size(self, text, m, size):
        c = ops.class_data(m, ops.parse_cycle_type(text, m))
        assert c.size == size
        assert c.is_real
        assert c.group_spec == f"sym:{m}"

    def test_class_sizes_sum_to_group_order(self):
        assert sum(ops.class_data(7, t).size for t in ops.iter_cycle_types(7)) == 5040

    def test_iter_conjugates_enumerates_class(self):
        sigma = ops.parse_permutation("(1 2 3)", 5)
        conjugates = list(ops.iter_conjugates(sigma))
        assert conjugates[0] == sigma
        assert len(conjugates) == len(set(conjugates)) == 20

    @given(perms6, perms6)
    def test_relabel_conjugator(self, a, b):
        target = ops.conjugate(b, a)
        g = ops.relabel_conjugator(a, target)
        assert g is not None
        assert ops.conjugate(g, a) == target

    def test_relabel_conjugator_different_types(self):
        a = ops.parse_permutation("(1 2)", 4)
        b = ops.parse_permutation("(1 2 3)", 4)
        assert ops.relabel_conjugator(a, b) is None


class TestSymmetricGroup:
    def test_json_round_trip(self):
        group = SymmetricGroup(5)
        a = group.parse("(1 3 5)(2 4)")
        assert group.element_from_json(group.element_to_json(a)) == a
        assert group.element_from_json("(1 3 5)(2 4)") == a

    def test_from_json_wrong_degree(self):
        with pytest.raises(InputError):
            SymmetricGroup(5).element_from_json([2, 1, 3])

    def test_find_conjugator(self):
        group = SymmetricGroup(6)
        a = group.parse("(1 2 3)(4 5)")
        b = group.parse("(2 6 4)(1 3)")
        g = group.find_conjugator(a, b)
        assert group.is_conjugate_pair(g, a, b)


class TestSympyBacking:
    def test_sympy_product_order(self):
        a = Permutation.from_cycles(3, [(1, 2)])
        b = Permutation.from_cycles(3, [(2, 3)])
        # sympy multiplies left to right
        assert (a * b).sym == b.sym * a.sym

    def test_from_sympy_round_trip(self):
        a = ops.parse_permutation("(1 4)(2 5 3)", 5)
        assert Permutation.from_sympy(a.sym) == a
        assert a.sym.cyclic_form == [[0, 3], [1, 4, 2]]

    def test_cycles_with_fixed_points(self):
        a = ops.parse_permutation("(2 4)", 5)
        assert a.cycles() == [(2, 4)]
        assert a.cycles(include_fixed=True) == [(1,), (2, 4), (3,), (5,)]
        assert a.support() == (2, 4)

    @given(perms7)
    def test_order_and_cycle_structure(self, a):
        assert ops.power(a, ops.order(a)).is_identity()
        t = ops.cycle_type(a)
        assert t.order == ops.order(a)
        assert sum(j * n for j, n in a.cycle_structure().items()) == 7
        assert dict(t.multiplicities) == a.cycle_structure()

    def test_eight_cycle_cube(self):
        sigma = ops.parse_permutation("(1 2 3 4 5 6 7 8)", 8)
        assert ops.power(sigma, 3) == ops.parse_permutation("(1 4 7 2 5 8 3 6)", 8)
        assert ops.power(sigma, -5) == ops.power(sigma, 3)

    def test_conjugate_relabels_cycles(self):
        a = ops.parse_permutation("(2 4 6)", 6)
        b = ops.parse_permutation("(1 2 3 4 5 6)", 6)
        assert ops.conjugate(a, b) == ops.parse_permutation("(1 4 3 6 5 2)", 6)
