"""Tests for roots of unity, cocycles, the braid equation and YD cocycles."""

import pytest
import sympy

from rackit.braided import (
    Character,
    CharacterEvaluator,
    Cocycle,
    CosetSection,
    RootOfUnity,
    braiding_apply,
    check_braid_equation,
    check_bvs_isomorphism,
    check_cocycle,
    check_section,
    constant_cocycle,
    is_diagonal_type,
    restrict_cocycle,
    yd_cocycle,
)
from rackit.errors import BudgetExceeded, InputError
from rackit.perm.group import SymmetricGroup
from rackit.perm.types import Permutation
from rackit.rack import RackMorphism, dihedral_rack, octahedral_rack

MINUS_ONE = RootOfUnity.minus_one()


def transposition(i, j):
    return Permutation.from_cycles(3, [(i, j)])


@pytest.fixture
def s3_section():
    """Transpositions of S_3 with base (1 2)."""
    base = transposition(1, 2)
    return CosetSection(
        base=base,
        elements=(base, transposition(1, 3), transposition(2, 3)),
        transporters=(Permutation.identity(3), transposition(2, 3), transposition(1, 3)),
    )


@pytest.fixture
def sign_character():
    return Character(generators=(transposition(1, 2),), values=(MINUS_ONE,), name="sign")


class TestRootOfUnity:
    def test_equality_is_by_value(self):
        assert RootOfUnity(2, 1) == RootOfUnity(4, 2)
        assert hash(RootOfUnity(2, 1)) == hash(RootOfUnity(6, 3))
        assert RootOfUnity(3, 1) != RootOfUnity(3, 2)

    def test_arithmetic(self):
        w = RootOfUnity(3, 1)
        assert (w * RootOfUnity(3, 2)).is_one
        assert w * w == w.inverse()
        assert (w ** 3).is_one
        assert (MINUS_ONE * RootOfUnity(4, 1)) == RootOfUnity(4, 3)

    def test_order(self):
        assert RootOfUnity(6, 3).multiplicative_order() == 2
        assert RootOfUnity(12, 8).multiplicative_order() == 3

    def test_lift(self):
        assert RootOfUnity(3, 1).lift(6).exponent == 2
        with pytest.raises(InputError):
            RootOfUnity(3, 1).lift(4)
        with pytest.raises(InputError):
            RootOfUnity(0, 0)

    def test_str_and_sympy(self):
        assert str(MINUS_ONE) == "-1"
        assert str(RootOfUnity.one()) == "1"
        assert str(RootOfUnity(6, 2)) == "e^(2πi·1/3)"
        assert MINUS_ONE.as_sympy() == -1
        assert sympy.simplify(RootOfUnity(4, 1).as_sympy() - sympy.I) == 0


class TestCocycles:
    def test_constant_minus_one_on_octahedral(self):
        q = constant_cocycle(octahedral_rack(), MINUS_ONE)
        assert check_cocycle(q).ok
        diagnosis = check_braid_equation(q)
        assert diagnosis.ok
        assert diagnosis.checked == 216
        assert q.is_constant(MINUS_ONE)
        assert not q.is_constant(RootOfUnity.one())

    def test_perturbed_cocycle_fails(self):
        rack = dihedral_rack(3)
        exps = ((1, 0, 0), (0, 0, 0), (0, 0, 0))
        q = Cocycle(rack=rack, order=2, exponents=exps)
        assert not check_cocycle(q).ok
        assert not check_braid_equation(q).ok

    def test_shape(self):
        with pytest.raises(InputError):
            Cocycle(rack=dihedral_rack(3), order=2, exponents=((0, 0), (0, 0)))

    def test_json(self):
        q = constant_cocycle(octahedral_rack(), MINUS_ONE)
        decoded = Cocycle.from_json(q.to_json())
        assert decoded.order == 2
        assert decoded.exponents == q.exponents
        assert decoded.rack.table == q.rack.table
        with pytest.raises(InputError):
            Cocycle.from_json({"L": 2})

    def test_restrict(self):
        q = constant_cocycle(octahedral_rack(), MINUS_ONE)
        sub = restrict_cocycle(q, [0, 5])
        assert sub.size == 2
        assert sub.is_constant(MINUS_ONE)
        with pytest.raises(InputError):
            restrict_cocycle(q, [0, 1])


class TestBraiding:
    def test_apply(self):
        q = constant_cocycle(octahedral_rack(), MINUS_ONE)
        assert braiding_apply(q, (0, 1)) == ((4, 0), MINUS_ONE)
        with pytest.raises(InputError):
            braiding_apply(q, (0, 6))

    def test_diagonal_type(self):
        q = constant_cocycle(octahedral_rack(), MINUS_ONE)
        assert is_diagonal_type(q, [0, 5])
        with pytest.raises(InputError):
            is_diagonal_type(q, [0, 1])

    def test_isomorphism(self):
        rack = octahedral_rack()
        q1 = constant_cocycle(rack, MINUS_ONE)
        q2 = constant_cocycle(rack, RootOfUnity.one())
        identity = RackMorphism.identity(rack)
        assert check_bvs_isomorphism(q1, q1, identity)
        assert not check_bvs_isomorphism(q1, q2, identity)
        with pytest.raises(InputError):
            check_bvs_isomorphism(q1, q1, RackMorphism(rack, rack, (1, 0, 2, 3, 4, 5)))


class TestYetterDrinfeld:
    def test_sign_character_on_transpositions(self, s3_section, sign_character):
        q = yd_cocycle(SymmetricGroup(3), s3_section, sign_character)
        assert q.size == 3
        assert q.q(0, 0) == MINUS_ONE
        assert q.q(1, 0).is_one
        assert check_braid_equation(q).ok

    def test_two_copies(self, s3_section, sign_character):
        q = yd_cocycle(SymmetricGroup(3), s3_section, sign_character, copies=2)
        assert q.size == 6
        assert check_braid_equation(q).ok
        with pytest.raises(InputError):
            yd_cocycle(SymmetricGroup(3), s3_section, sign_character, copies=3)

    def test_bad_section(self):
        base = transposition(1, 2)
        with pytest.raises(InputError):
            CosetSection(base=base, elements=(transposition(1, 3),), transporters=(Permutation.identity(3),))
        section = CosetSection(
            base=base,
            elements=(base, transposition(1, 3)),
            transporters=(Permutation.identity(3), Permutation.identity(3)),
        )
        with pytest.raises(InputError):
            check_section(SymmetricGroup(3), section)

    def test_evaluator_detects_non_homomorphism(self):
        chi = Character(generators=(transposition(1, 2),), values=(RootOfUnity(3, 1),))
        s3 = SymmetricGroup(3)
        assert not chi.check_orders(s3)
        with pytest.raises(InputError):
            CharacterEvaluator(s3, chi)(transposition(1, 2))

    def test_evaluator_depth(self, sign_character):
        evaluate = CharacterEvaluator(SymmetricGroup(3), sign_character, depth=3)
        assert evaluate(Permutation.identity(3)).is_one
        assert evaluate(transposition(1, 2)) == MINUS_ONE
        with pytest.raises(BudgetExceeded):
            evaluate(transposition(1, 3))
