"""Tests for finite fields, rational function fields and places."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from refbloch.fields import (
    INFINITY,
    FieldError,
    Place,
    Poly,
    QQ,
    factor_int,
    ff_make,
    rational_function_field,
    residue,
    unit_decompose,
    valuation,
)


def brute_squares(field):
    """Independent oracle: the set {u^2 : u nonzero}."""
    return {u * u for u in field.units()}


def test_ff_make_basic():
    f5 = ff_make(5, 1)
    assert f5.q == 5 and f5.p == 5
    f9 = ff_make(3, 2)
    assert f9.q == 9
    # smallest-lex monic irreducible over GF(3) of degree 2 is x^2 + 1
    assert f9.modulus == (1, 0, 1)
    with pytest.raises(FieldError):
        ff_make(4, 1)
    with pytest.raises(FieldError):
        ff_make(3, 2, modulus=[0, 0, 1])  # x^2 is reducible


def test_ff_make_cached_identity():
    assert ff_make(7, 1) is ff_make(7, 1)
    assert ff_make(3, 2) is ff_make(3, 2, modulus=[1, 0, 1])


def test_field_arithmetic_gf9():
    f9 = ff_make(3, 2)
    x = f9.gen()
    assert x * x == -f9.one()  # modulus x^2 + 1
    for u in f9.units():
        assert u * u.inverse() == f9.one()
        assert (1 / u) * u == 1
    assert (1 - x) + x == 1


def test_elem_parsing_and_format():
    f9 = ff_make(3, 2)
    e = f9.elem("x+2")
    assert e == f9.gen() + 2
    assert f9.elem(f9.format_elem(e)) == e
    f7 = ff_make(7, 1)
    assert f7.elem("5") == f7.elem(5)


@pytest.mark.parametrize("q,expected", [((7, 1), {1, 2, 4}), ((5, 1), {1, 4})])
def test_is_square_small(q, expected):
    field = ff_make(*q)
    squares = {u.code() for u in field.units() if field.is_square(u)}
    assert squares == expected
    assert brute_squares(field) == {field.from_code(c) for c in expected}


def test_is_square_examples():
    f7 = ff_make(7, 1)
    assert f7.is_square(f7.elem(2))
    assert not f7.is_square(f7.elem(3))
    f8 = ff_make(2, 3)
    assert all(f8.is_square(u) for u in f8.units())
    f5 = ff_make(5, 1)
    assert f5.is_square(f5.elem(-1))  # -1 = 4 = 2^2
    with pytest.raises(FieldError):
        f5.is_square(f5.zero())


@pytest.mark.parametrize("p,f", [(3, 1), (5, 1), (7, 1), (3, 2), (2, 3), (5, 2), (3, 3)])
def test_squares_match_brute_force(p, f):
    field = ff_make(p, f)
    oracle = brute_squares(field)
    for u in field.units():
        assert field.is_square(u) == (u in oracle)


def test_square_homomorphism():
    for p, f in [(5, 1), (7, 1), (3, 2), (13, 1)]:
        field = ff_make(p, f)
        for x in field.units():
            for y in field.units():
                assert field.is_square(x * y) == (
                    field.is_square(x) == field.is_square(y)
                )


def test_primitive_and_dlog():
    f13 = ff_make(13, 1)
    g = f13.primitive_element()
    assert g == f13.elem(2)
    assert f13.dlog(f13.elem(1)) == 0
    for u in f13.units():
        assert g ** f13.dlog(u) == u


# -- Q places ----------------------------------------------------------------


def test_valuation_q():
    pl = Place.of_prime(5)
    assert valuation(pl, Fraction(50, 3)) == 2
    assert valuation(pl, Fraction(3, 25)) == -2
    assert valuation(pl, 7) == 0
    with pytest.raises(FieldError):
        valuation(pl, 0)


def test_residue_q():
    pl7 = Place.of_prime(7)
    r = residue(pl7, Fraction(10, 3))
    assert r == pl7.residue_field.elem(1)  # 10 * 3^{-1} = 3 * 5 = 15 = 1 mod 7
    pl5 = Place.of_prime(5)
    with pytest.raises(FieldError):
        residue(pl5, Fraction(5, 3))


def test_unit_decompose_q():
    pl5 = Place.of_prime(5)
    r, u = unit_decompose(pl5, Fraction(50, 3), Fraction(5))
    assert r == 2
    assert u == pl5.residue_field.elem(4)  # 2 * 3^{-1} = 2 * 2 = 4 mod 5
    pl3 = Place.of_prime(3)
    r, u = unit_decompose(pl3, Fraction(3), Fraction(3))
    assert (r, u) == (1, pl3.residue_field.one())
    with pytest.raises(FieldError):
        unit_decompose(pl5, Fraction(2), Fraction(25))


def test_integer_reconstruction_from_valuations():
    # a = +- prod p^{v_p(a)} exactly, checked on a spread of integers
    for n in list(range(1, 400)) + [9973, 360360, 999983, 10**6]:
        fac = factor_int(n)
        prod = 1
        for p, e in fac.items():
            assert valuation(Place.of_prime(p), Fraction(n)) == e
            prod *= p**e
        assert prod == n


small_fracs = st.fractions(
    min_value=Fraction(-1000), max_value=Fraction(1000), max_denominator=500
).filter(lambda x: x != 0)


@given(small_fracs, small_fracs, st.sampled_from([2, 3, 5, 7, 13]))
@settings(max_examples=200, deadline=None)
def test_q_multiplicativity(a, b, p):
    pl = Place.of_prime(p)
    assert valuation(pl, a * b) == valuation(pl, a) + valuation(pl, b)
    if valuation(pl, a) == 0 and valuation(pl, b) == 0:
        assert residue(pl, a * b) == residue(pl, a) * residue(pl, b)


@given(small_fracs, st.sampled_from([3, 5, 7]))
@settings(max_examples=100, deadline=None)
def test_unit_decompose_roundtrip(a, p):
    pl = Place.of_prime(p)
    pi = Fraction(p)
    r, u = unit_decompose(pl, a, pi)
    unit = a / pi**r
    assert valuation(pl, unit) == 0
    assert residue(pl, unit) == u


# -- function-field places ----------------------------------------------------


def test_valuation_ratfunc():
    k5t = rational_function_field(5)
    t = k5t.t()
    pl_t = Place.of_poly(k5t, k5t.poly([0, 1]))
    a = (t * t + t) / (t + 1)  # = t
    assert valuation(pl_t, a) == 1
    pl_inf = Place.at_infinity(k5t)
    assert valuation(pl_inf, t**3) == -3
    assert valuation(pl_inf, 1 / t) == 1


def test_residue_ratfunc():
    k5t = rational_function_field(5)
    t = k5t.t()
    pl_t = Place.of_poly(k5t, k5t.poly([0, 1]))
    a = (t + 2) / (t + 1)
    assert residue(pl_t, a) == pl_t.residue_field.elem(2)
    pl_inf = Place.at_infinity(k5t)
    b = (3 * t**2 + 1) / (t**2 + t)
    assert residue(pl_inf, b) == pl_inf.residue_field.elem(3)


def test_unit_decompose_ratfunc():
    k5t = rational_function_field(5)
    t = k5t.t()
    pl_t = Place.of_poly(k5t, k5t.poly([0, 1]))
    r, u = unit_decompose(pl_t, t**2 * (t + 1), t)
    assert (r, u) == (2, pl_t.residue_field.one())
    pl_inf = Place.at_infinity(k5t)
    r, u = unit_decompose(pl_inf, t**3, 1 / t)
    assert r == -3 and u == pl_inf.residue_field.one()


def test_higher_degree_place():
    k5t = rational_function_field(5)
    pi = k5t.poly([2, 0, 1])  # t^2 + 2, irreducible mod 5 (-2 is not a QR)
    pl = Place.of_poly(k5t, pi)
    k = pl.residue_field
    assert k.q == 25
    t = k5t.t()
    r = residue(pl, t**2)  # == -2 in GF(25)
    assert r == k.elem(-2)
    assert valuation(pl, k5t.elem(pi) ** 3 / (t + 1)) == 3


def test_poly_factorisation():
    k5t = rational_function_field(5)
    tpoly = k5t.poly([0, 1])
    f = k5t.poly([0, 1]) * k5t.poly([1, 1]) ** 2 * k5t.poly([2, 0, 1])
    fac = k5t.factor_poly(f)
    assert fac[tpoly] == 1
    assert fac[k5t.poly([1, 1])] == 2
    assert fac[k5t.poly([2, 0, 1])] == 1
    assert k5t.is_irreducible(k5t.poly([2, 0, 1]))
    assert not k5t.is_irreducible(k5t.poly([4, 0, 1]))  # t^2 - 1


def test_ratfunc_literals():
    k5t = rational_function_field(5)
    a = k5t.elem("(t^2+3t+1)/(t+2)")
    t = k5t.t()
    assert a == (t**2 + 3 * t + 1) / (t + 2)
    assert k5t.elem(k5t.format_elem(a)) == a


def test_ratfunc_reduction_invariants():
    k5t = rational_function_field(5)
    t = k5t.t()
    a = (2 * t**2 + 2 * t) / (4 * t)
    assert a.den.is_monic()
    assert a.num.gcd(a.den).degree == 0
    assert a == (t + 1) * 3  # (2t^2+2t)/(4t) = (t+1)/2 = 3(t+1) mod 5
