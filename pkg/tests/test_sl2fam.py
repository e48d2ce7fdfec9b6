from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from d21a.arith import ALPHA, ZERO, Scalar
from d21a.sl2fam import (
    FamilyPoint,
    NotCuspidal,
    TensorFamily,
    annihilated_vectors,
    casimir_on,
    casimir_scalar,
    family_action,
    is_simple_cuspidal,
    tensor_degree_and_support,
    verify_sl2_relations,
)

half = Fraction(1, 2)
rationals = st.fractions(min_value=-4, max_value=4, max_denominator=7)


def test_action_examples():
    s = ALPHA + 3
    assert family_action(ALPHA, "e", s) == (2 * ALPHA + 3, s + 1)
    c, t = family_action(ALPHA, "f", ALPHA)
    assert c == ZERO and t == ALPHA - 1
    assert family_action(1, "h", 0) == (ZERO, ZERO)
    with pytest.raises(ValueError):
        family_action(1, "x", 0)


def test_cuspidality_examples():
    assert is_simple_cuspidal(half, 0)
    assert not is_simple_cuspidal(1, 0)
    assert is_simple_cuspidal(ALPHA, 0)
    assert not is_simple_cuspidal(ALPHA, -ALPHA + 2)


def test_casimir_examples():
    assert casimir_scalar(0) == ZERO
    assert casimir_scalar(1) == ZERO
    assert casimir_scalar(half) == Scalar(-1)
    assert casimir_scalar(ALPHA) == 4 * ALPHA * ALPHA - 4 * ALPHA


def test_casimir_with_unit_fe_coefficient_is_not_scalar():
    a = Scalar(half)
    plain = [2 * s * 2 * s + 2 * 2 * s + (a + s) * (a - s - 1) for s in map(Scalar, range(-2, 3))]
    assert len(set(plain)) > 1


@given(rationals, rationals)
def test_casimir_is_s_independent(a, s):
    assert casimir_on(a, s) == casimir_on(a, Scalar(s) + 7)


@given(rationals, rationals)
def test_relations_hold(a, mu):
    assert verify_sl2_relations(FamilyPoint(a, mu, -5, 5))


def test_relations_hold_symbolically():
    assert verify_sl2_relations(FamilyPoint(ALPHA, Fraction(2, 7)))
    point = FamilyPoint(Fraction(3, 5), ALPHA)
    assert verify_sl2_relations(point)
    for s in point.interior():
        ef = family_action(point.a, "f", s)[0] * family_action(point.a, "e", s - 1)[0]
        fe = family_action(point.a, "e", s - 1)[0] * family_action(point.a, "f", s)[0]
        assert ef == fe
        up = family_action(point.a, "e", family_action(point.a, "f", s)[1])[0] * family_action(point.a, "f", s)[0]
        down = family_action(point.a, "f", family_action(point.a, "e", s)[1])[0] * family_action(point.a, "e", s)[0]
        assert up - down == 2 * s


def test_boundary_cases_are_detected():
    # mu + a in Z: x^{-a} is killed by e
    point = FamilyPoint(Fraction(1, 3), Fraction(-1, 3) + 2)
    assert not point.cuspidal
    assert (Scalar(Fraction(-1, 3)), "e") in annihilated_vectors(point)
    # mu - a in Z: x^{a} is killed by f
    point = FamilyPoint(Fraction(2, 5), Fraction(2, 5) - 1)
    assert (Scalar(Fraction(2, 5)), "f") in annihilated_vectors(point)
    for a, mu in [(half, 0), (ALPHA, 0), (Fraction(1, 3), Fraction(1, 4))]:
        assert FamilyPoint(a, mu).cuspidal and annihilated_vectors(FamilyPoint(a, mu)) == []


def test_tensor_degree_and_support():
    pts = (FamilyPoint(half, 0, -2, 2), FamilyPoint(ALPHA, Fraction(1, 3), -2, 2), FamilyPoint(Fraction(1, 3), Fraction(1, 5), -2, 2))
    degree, support = tensor_degree_and_support(TensorFamily(pts))
    assert degree == 1
    assert support.contains((Scalar(1), Fraction(1, 3), Fraction(1, 5)))
    assert support.contains((Scalar(2), Fraction(1, 3), Fraction(1, 5)))
    assert not support.contains((half, Fraction(1, 3), Fraction(1, 5)))
    bad = (FamilyPoint(1, 0), *pts[1:])
    with pytest.raises(NotCuspidal):
        tensor_degree_and_support(TensorFamily(bad))


def test_action_csv():
    lines = FamilyPoint(half, 0, 0, 0).to_csv().splitlines()
    assert lines == ["s,generator,coefficient", "0,e,(1/2)", "0,f,(1/2)", "0,h,0"]


def test_empty_window_rejected():
    with pytest.raises(ValueError):
        FamilyPoint(half, 0, 2, 1)
