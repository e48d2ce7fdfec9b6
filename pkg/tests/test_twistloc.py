from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from d21a.arith import ALPHA, ONE, Scalar
from d21a.sl2fam import family_action
from d21a.twistloc import (
    E,
    F,
    F_INV,
    H,
    CubeElement,
    LocalizedElement,
    binomial,
    check_composition,
    check_homomorphism,
    commutator,
    cube_twist,
    family_identification,
    is_identity_twist,
    phi,
    twist_highest_weight,
)

mono = LocalizedElement.monomial
rationals = st.fractions(min_value=-3, max_value=3, max_denominator=5)


def test_ordering_rules():
    assert F * F_INV == LocalizedElement.scalar(1)
    assert F_INV * F == LocalizedElement.scalar(1)
    assert commutator(E, F) == H
    assert commutator(H, E) == 2 * E
    assert commutator(H, F) == -2 * F
    # f^-1 e = e f^-1 + (h - 2) f^-2
    assert F_INV * E == mono(1, 0, -1) + mono(0, 1, -2) - 2 * mono(0, 0, -2)


@given(st.lists(st.sampled_from([E, H, F, F_INV]), min_size=3, max_size=3))
def test_associativity(words):
    x, y, z = words
    assert (x * y) * z == x * (y * z)


def test_ad_f():
    assert commutator(F, E) == -H
    assert commutator(F, H) == 2 * F


def test_phi_examples():
    mu = ALPHA
    assert phi(F, mu) == F
    assert phi(H, mu) == H + 2 * mu
    assert phi(E, mu) == E - mu * (H * F_INV) - mu * (mu - 1) * F_INV


@pytest.mark.parametrize("mu", [0, 1, -1, Fraction(1, 2), ALPHA])
def test_homomorphism(mu):
    assert check_homomorphism(mu)


def test_phi_zero_is_identity():
    monos = [(i, j, k) for i in range(3) for j in range(3) for k in range(-2, 3)]
    assert is_identity_twist(monos)


@given(rationals, rationals)
def test_composition_rational(mu, nu):
    assert check_composition(mu, nu)


def test_composition_symbolic():
    assert check_composition(ALPHA, Fraction(1, 3))
    assert check_composition(Fraction(-2, 3), ALPHA)


def test_phi_is_multiplicative():
    mu = Fraction(2, 3)
    for x in (E, H, F, E * E, H * F_INV):
        for y in (E, F, H):
            assert phi(x * y, mu) == phi(x, mu) * phi(y, mu)


def test_binomial():
    assert binomial(ALPHA, 2) == ALPHA * (ALPHA - 1) / 2
    assert binomial(0, 3) == Scalar(0)
    assert binomial(5, 2) == Scalar(10)


def test_twist_zero_is_original_module():
    lam = Fraction(1, 3)
    T = twist_highest_weight(lam, 0, (0, 4))
    for r in T.rows:
        k = r.k.as_integer()
        if r.generator == "e":
            assert r.coefficient == k * (lam - k + 1) and r.target == k - 1
        elif r.generator == "f":
            assert r.coefficient == ONE and r.target == k + 1
        else:
            assert r.coefficient == lam - 2 * k


@pytest.mark.parametrize("lam", [Fraction(1, 3), Fraction(-5, 2), -2, ALPHA])
@pytest.mark.parametrize("mu", [0, Fraction(1, 2), ALPHA, Fraction(-4, 7)])
def test_fe_eigenvalues_match_family(lam, mu):
    T = twist_highest_weight(lam, mu, (-3, 3))
    assert T.degree() == 1
    assert T.relations_hold()
    for k in T.labels():
        a, s = family_identification(T.lam, k)
        c_e, s1 = family_action(a, "e", s)
        c_f, _ = family_action(a, "f", s1)
        assert T.fe_eigenvalue(k) == c_e * c_f
        assert T.weight(k) == family_action(a, "h", s)[0]


def test_dominant_integral_rejected():
    with pytest.raises(ValueError):
        twist_highest_weight(2, Fraction(1, 2))
    with pytest.raises(ValueError):
        twist_highest_weight(0, 0)


def test_twist_support_is_translate():
    T = twist_highest_weight(Fraction(1, 3), Fraction(1, 2), (-2, 2))
    assert [T.weight(k) for k in T.labels()] == [Scalar(Fraction(1, 3)) - 2 * (n - Fraction(1, 2)) for n in range(-2, 3)]


def test_cube_twists_commute():
    u = CubeElement.pure([E, H * E, F_INV])
    mus = [ALPHA, Fraction(1, 2), Fraction(-2, 3)]
    base = cube_twist(u, mus)
    for order in [(1, 0, 2), (2, 1, 0), (0, 2, 1)]:
        assert cube_twist(u, mus, order) == base


def test_twist_csv():
    lines = twist_highest_weight(Fraction(1, 3), 0, (0, 0)).to_csv().splitlines()
    assert lines == ["k,generator,coefficient", "0,e,0", "0,f,1", "0,h,(1/3)"]
