from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import complex_value, field_add, field_mul
from svoa.parsing import ParseError, format_scalar, parse_scalar
from svoa.scalars import I, INV_SQRT2, INV_SQRT3, ONE, SQRT2, SQRT3, ZERO, ZETA, Scalar, named_constants

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)
scalars = st.lists(small, min_size=8, max_size=8).map(lambda cs: Scalar.from_coords(cs))


def rand_scalar(rng: random.Random) -> Scalar:
    return Scalar.from_coords([Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(8)])


def test_defining_relations():
    assert SQRT2 * SQRT2 == 2
    assert I * I == -1
    assert SQRT3.inverse() * SQRT3 == ONE
    assert SQRT3 * SQRT3 == 3
    assert ZETA ** 8 == ZETA ** 4 - 1


def test_named_constants_against_reduction_oracle():
    for name, c in named_constants().items():
        sq = field_mul(c.coeffs, c.coeffs)
        assert Scalar.from_coords(sq) == c * c, name
    assert field_mul(I.coeffs, I.coeffs) == (Fraction(-1),) + (Fraction(0),) * 7
    assert field_mul(SQRT2.coeffs, SQRT2.coeffs)[0] == 2
    assert field_mul(SQRT3.coeffs, SQRT3.coeffs)[0] == 3
    assert abs(complex(INV_SQRT2) - 2 ** -0.5) < 1e-12
    assert abs(complex(INV_SQRT3) - 3 ** -0.5) < 1e-12
    assert abs(complex(I) - 1j) < 1e-12


def test_zeta_power_reduction_oracle():
    for k in range(24):
        z = Scalar.zeta_power(k)
        assert abs(complex(z) - complex_value(z.coeffs) ) < 1e-12
        assert z * Scalar.zeta_power(24 - k) == ONE


def test_random_products_match_oracle():
    rng = random.Random(1)
    for _ in range(60):
        a, b = rand_scalar(rng), rand_scalar(rng)
        assert (a * b).coeffs == field_mul(a.coeffs, b.coeffs)
        assert (a + b).coeffs == field_add(a.coeffs, b.coeffs)


def test_field_axioms_on_200_random_triples():
    rng = random.Random(0)
    for _ in range(200):
        a, b, c = rand_scalar(rng), rand_scalar(rng), rand_scalar(rng)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * a.inverse() == ONE


@settings(max_examples=60, deadline=None)
@given(scalars, scalars)
def test_hypothesis_commutative(a, b):
    assert a * b == b * a
    assert a + b - b == a


@settings(max_examples=40, deadline=None)
@given(scalars)
def test_hypothesis_inverse_and_norm(a):
    if a:
        assert a * a.inverse() == ONE
        assert a.norm() > 0
        assert (a / a) == ONE


def test_canonical_form_idempotent():
    s = Scalar([0] * 8 + [1, 0, 0, 0, 0, 0, 0])  # z^8
    assert s == ZETA ** 4 - 1
    again = Scalar(list(s._n), s._d)
    assert again._n == s._n and again._d == s._d


def test_zero_and_division_by_zero():
    assert ZERO.is_zero() and not ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_galois_and_conjugation():
    assert I.conjugate() == -I
    assert SQRT2.conjugate() == SQRT2
    assert (SQRT2 + I).conjugate() == SQRT2 - I


@pytest.mark.parametrize("text, value", [
    ("1/2", Scalar.from_rational(Fraction(1, 2))),
    ("i", I),
    ("sqrt2", SQRT2),
    ("-3*sqrt3/2", SQRT3 * Fraction(-3, 2)),
    ("z^7", ZETA ** 7),
    ("i/2 + 1/sqrt2", I * Fraction(1, 2) + INV_SQRT2),
])
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("bad", ["", "1/", "sqrt5", "z^8", "2**"])
def test_parse_scalar_errors_report_position(bad):
    with pytest.raises(ParseError) as e:
        parse_scalar(bad)
    assert "line 1, column" in str(e.value)


def test_format_parse_round_trip():
    rng = random.Random(3)
    for _ in range(100):
        a = rand_scalar(rng)
        text = format_scalar(a)
        assert parse_scalar(text) == a
        assert format_scalar(parse_scalar(text)) == text
