"""Tests for square classes, dyadic coefficients and the group ring."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from refbloch.fields import QQ, ff_make, Place, rational_function_field
from refbloch.groupring import (
    Dyadic,
    GroupRingElement,
    GroupRingError,
    NotIntegral,
    SquareClass,
    ang,
    dbl,
    e_minus,
    e_plus,
    p_minus,
    p_plus,
    rho,
    square_class,
)


def test_dyadic_reduction():
    d = Dyadic(4, 3)
    assert (d.num, d.den2) == (1, 1)
    assert Dyadic(0, 5) == Dyadic(0)
    assert Dyadic(3, 1) + Dyadic(1, 1) == Dyadic(2)
    assert Dyadic(1, 1) * Dyadic(1, 1) == Dyadic(1, 2)
    assert Dyadic.from_fraction(Fraction(3, 8)) == Dyadic(3, 3)
    with pytest.raises(NotIntegral):
        Dyadic.from_fraction(Fraction(1, 3))


def test_square_class_q_examples():
    c = square_class(QQ, -18)
    assert c.data == (1, frozenset({2}))
    assert square_class(QQ, Fraction(4, 9)).is_identity()
    assert square_class(QQ, Fraction(-50, 3)).data == (1, frozenset({2, 3}))
    with pytest.raises(GroupRingError):
        square_class(QQ, 0)


def test_square_class_finite():
    f7 = ff_make(7, 1)
    assert square_class(f7, 3).data == 1
    assert square_class(f7, 2).data == 0
    f8 = ff_make(2, 3)
    for u in f8.units():
        assert square_class(f8, u).is_identity()


def test_square_class_ratfunc():
    k5t = rational_function_field(5)
    t = k5t.t()
    c = square_class(k5t, 2 * t)
    bit, irreds, parity = c.data
    assert bit == 1  # 2 is a nonsquare mod 5
    assert irreds == frozenset({k5t.poly([0, 1])})
    assert parity == 1
    assert square_class(k5t, (t + 1) ** 2 * 4).is_identity()
    rep = c.representative()
    assert square_class(k5t, rep) == c


nonzero_fracs = st.fractions(
    min_value=Fraction(-500), max_value=Fraction(500), max_denominator=60
).filter(lambda x: x != 0)


@given(nonzero_fracs, nonzero_fracs)
@settings(max_examples=150, deadline=None)
def test_square_class_is_multiplicative(a, b):
    assert square_class(QQ, a * b) == square_class(QQ, a) * square_class(QQ, b)
    assert square_class(QQ, a * a * b) == square_class(QQ, b)


def test_class_group_order_finite():
    for q in [(5, 1), (7, 1), (3, 2), (13, 1)]:
        field = ff_make(*q)
        classes = {square_class(field, u) for u in field.units()}
        assert len(classes) == 2
    for q in [(2, 2), (2, 3)]:
        field = ff_make(*q)
        classes = {square_class(field, u) for u in field.units()}
        assert len(classes) == 1


def test_ring_arithmetic_identities():
    f13 = ff_make(13, 1)
    for field, pairs in [
        (QQ, [(Fraction(2), Fraction(3)), (Fraction(-5), Fraction(7, 2))]),
        (f13, [(f13.elem(2), f13.elem(5)), (f13.elem(6), f13.elem(11))]),
    ]:
        for a, b in pairs:
            lhs = dbl(field, a) * dbl(field, b)
            rhs = ang(field, a * b) - ang(field, a) - ang(field, b) + GroupRingElement.one(field)
            assert lhs == rhs
            assert (p_plus(field, a) * p_minus(field, a)).is_zero()
            em = e_minus(field, a)
            ep = e_plus(field, a)
            assert em * em == em
            assert ep * ep == ep
            assert (em * ep).is_zero()
            assert em + ep == GroupRingElement.one(field)


def test_augmentation_and_integrality():
    x = dbl(QQ, 2) * 3 + GroupRingElement.one(QQ)
    assert x.augmentation() == Dyadic(1)
    assert x.is_integral()
    assert not e_minus(QQ, 2).is_integral()


def test_rho_examples():
    pl5 = Place.of_prime(5)
    k5 = pl5.residue_field
    r_minus = rho(pl5, Fraction(5), -1)
    img = r_minus(ang(QQ, 5))
    assert img == GroupRingElement.of_class(SquareClass.identity(k5), -1)
    img7 = r_minus(ang(QQ, 7))
    assert img7 == GroupRingElement.of_class(square_class(k5, 2))
    assert square_class(k5, 2).data == 1  # 2 is a nonsquare mod 5
    r_plus = rho(pl5, Fraction(5), 1)
    img25 = r_plus(ang(QQ, -25))
    assert img25 == GroupRingElement.one(k5)  # -1 = 4 is a square mod 5


@given(
    st.sampled_from([3, 5, 7, 13]),
    nonzero_fracs,
    nonzero_fracs,
    st.sampled_from([1, -1]),
)
@settings(max_examples=150, deadline=None)
def test_rho_multiplicative(p, a, b, eps):
    pl = Place.of_prime(p)
    r = rho(pl, Fraction(p), eps)
    x = ang(QQ, a)
    y = ang(QQ, b)
    assert r(x * y) == r(x) * r(y)
    assert r(x + y) == r(x) + r(y)


def test_rho_ratfunc():
    k5t = rational_function_field(5)
    t = k5t.t()
    pl = Place.of_poly(k5t, k5t.poly([0, 1]))
    r = rho(pl, t, -1)
    # <t> -> -<1>, <t+2> -> <2bar> (nonsquare)
    assert r(ang(k5t, t)) == GroupRingElement.of_class(
        SquareClass.identity(pl.residue_field), -1
    )
    assert r(ang(k5t, t + 2)) == GroupRingElement.of_class(
        square_class(pl.residue_field, 2)
    )


def test_idempotent_products_expand():
    # e-(a) e-(b) e-(ab) expansion stays inside the span of the four classes
    field = QQ
    a, b = Fraction(2), Fraction(3)
    prod = e_minus(field, a) * e_minus(field, b) * e_minus(field, a * b)
    expected_classes = {
        SquareClass.identity(field),
        square_class(field, a),
        square_class(field, b),
        square_class(field, a * b),
    }
    assert set(prod.terms) <= expected_classes
    # character-theory check: the product of the three e- has augmentation 0
    assert prod.augmentation() == Dyadic(0)


def test_json_roundtrip():
    x = e_minus(QQ, 5) * 3 + ang(QQ, -2)
    payload = x.to_json()
    back = GroupRingElement.from_json(QQ, payload)
    assert back == x
    f7 = ff_make(7, 1)
    y = ang(f7, 3) * Dyadic(1, 1) - 2
    assert GroupRingElement.from_json(f7, y.to_json()) == y
