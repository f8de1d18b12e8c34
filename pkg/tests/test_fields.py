"""Scalar field arithmetic, parsing and rendering."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from leibnizalg import GF, QQ
from leibnizalg.errors import (
    DenominatorDivisibleByP,
    DivisionByZero,
    FieldMismatch,
    InvalidParams,
    ParseError,
)
from leibnizalg.fields import ensure_same_field


def test_rational_arithmetic():
    a = QQ.parse("1/2")
    b = QQ.parse("1/3")
    assert QQ.add(a, b) == Fraction(5, 6)
    assert QQ.mul(a, b) == Fraction(1, 6)
    assert QQ.sub(a, b) == Fraction(1, 6)
    assert QQ.div(a, b) == Fraction(3, 2)
    assert QQ.neg(a) == Fraction(-1, 2)
    assert QQ.inv(b) == 3


def test_rational_parse_render_round_trip():
    for text in ["0", "7", "-3", "22/7", "-5/9"]:
        v = QQ.parse(text)
        assert QQ.parse(QQ.render(v)) == v


def test_rational_render_is_reduced():
    assert QQ.render(QQ.parse("4/8")) == "1/2"
    assert QQ.render(QQ.parse("-2/4")) == "-1/2"


@pytest.mark.parametrize("bad", ["", "1/0", "1.5", "a", "1/-2", "--2", "1 / 2", "+3"])
def test_rational_parse_rejects_malformed(bad):
    with pytest.raises(ParseError):
        QQ.parse(bad)


def test_prime_field_basics():
    f5 = GF(5)
    assert f5.p == 5
    assert f5.add(3, 4) == 2
    assert f5.mul(3, 4) == 2
    assert f5.neg(2) == 3
    assert f5.inv(3) == 2
    assert f5.div(1, 4) == 4
    assert list(f5.elements()) == [0, 1, 2, 3, 4]


def test_prime_field_fraction_literals():
    f7 = GF(7)
    # 1/2 means the inverse of 2 mod 7
    assert f7.parse("1/2") == 4
    assert f7.parse("3/5") == f7.mul(3, f7.inv(5))
    assert f7.parse("-1") == 6


def test_prime_field_denominator_divisible_by_p():
    with pytest.raises(DenominatorDivisibleByP):
        GF(5).parse("1/10")
    with pytest.raises(DenominatorDivisibleByP):
        GF(3).parse("2/3")


def test_nonprime_modulus_rejected():
    for n in [0, 1, 4, 6, 9, 15]:
        with pytest.raises(InvalidParams):
            GF(n)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        QQ.inv(Fraction(0))
    with pytest.raises(DivisionByZero):
        GF(5).div(2, 0)


def test_field_equality_and_mismatch():
    assert GF(5) == GF(5)
    assert GF(5) != GF(7)
    assert QQ != GF(2)
    ensure_same_field(GF(3), GF(3))
    with pytest.raises(FieldMismatch):
        ensure_same_field(QQ, GF(3))


def test_coerce_rejects_bool_and_floats():
    with pytest.raises(ParseError):
        QQ.coerce(0.5)
    with pytest.raises(ParseError):
        GF(5).coerce(True)


rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=10**4)


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    assert QQ.add(a, b) == QQ.add(b, a)
    assert QQ.mul(a, QQ.add(b, c)) == QQ.add(QQ.mul(a, b), QQ.mul(a, c))
    assert QQ.add(a, QQ.zero) == a
    assert QQ.mul(a, QQ.one) == a
    if a != 0:
        assert QQ.mul(a, QQ.inv(a)) == 1


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
def test_prime_field_axioms_mod_7(a, b, c):
    f = GF(7)
    assert f.add(a, b) == f.add(b, a)
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == 0
    if a != 0:
        assert f.mul(a, f.inv(a)) == 1


@given(st.integers(-500, 500), st.integers(1, 500))
def test_parse_render_inverse_over_q(num, den):
    text = f"{num}/{den}"
    assert QQ.parse(QQ.render(QQ.parse(text))) == Fraction(num, den)
