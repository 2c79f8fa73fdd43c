from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bimat.scalars import (
    GaussRational, I_UNIT, ONE, ZERO, format_gauss, format_rational, gauss_arith, inv_sqrt,
    parse_gauss, parse_rational, rat_arith,
)

fracs = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)
gauss = st.builds(GaussRational, fracs, fracs)


@given(gauss, gauss, gauss)
def test_field_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@given(gauss)
def test_inverse_and_conj(a):
    if a:
        assert a * a.inv() == ONE
        assert a / a == ONE
    else:
        with pytest.raises(ZeroDivisionError):
            a.inv()
    assert a * a.conj() == GaussRational(a.norm2())
    assert a.conj().conj() == a


@given(gauss, gauss)
def test_product_matches_pairs_formula(a, b):
    # independent oracle: (a+bi)(c+di) = (ac-bd) + (ad+bc)i on the Fraction pairs
    p = a * b
    assert (p.re, p.im) == (a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re)


@given(gauss)
def test_gauss_text_round_trip(z):
    assert parse_gauss(format_gauss(z)) == z


@given(fracs)
def test_rational_text_round_trip(q):
    s = format_rational(q)
    assert "/" in s
    assert parse_rational(s) == q


def test_text_forms():
    assert format_gauss(GaussRational(Fraction(1, 2), Fraction(1, 2))) == "1/2+1/2 i"
    assert format_gauss(GaussRational(0, -1)) == "0/1-1/1 i"
    assert parse_gauss("i") == I_UNIT
    assert parse_gauss("-i") == -I_UNIT
    assert parse_gauss("3/4 i") == GaussRational(0, Fraction(3, 4))
    assert parse_gauss("1-2/3 i") == GaussRational(1, Fraction(-2, 3))
    assert I_UNIT * I_UNIT == -ONE
    with pytest.raises(ValueError):
        parse_gauss("1.5")
    with pytest.raises(ValueError):
        parse_rational("x")
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


def test_arith_helpers():
    assert rat_arith(1, "1/3", "add") == Fraction(4, 3)
    assert rat_arith("1/2", "1/3", "mul") == Fraction(1, 6)
    with pytest.raises(ZeroDivisionError):
        rat_arith(1, 0, "div")
    assert gauss_arith(I_UNIT, I_UNIT, "mul") == -1
    assert gauss_arith(ONE, I_UNIT, "div") == -I_UNIT


def test_inv_sqrt():
    assert inv_sqrt(4) == Fraction(1, 2)
    assert inv_sqrt(1) == 1
    assert inv_sqrt(9) == Fraction(1, 3)
    for bad in (2, 3, 8, 0, -4):
        with pytest.raises(ValueError):
            inv_sqrt(bad)


def test_no_floats():
    with pytest.raises(TypeError):
        GaussRational.coerce(1j)
    with pytest.raises(TypeError):
        GaussRational(0.5)
    z = GaussRational(1)
    with pytest.raises(AttributeError):
        z.re = 2
