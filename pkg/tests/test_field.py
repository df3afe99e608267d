import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from annihilator.errors import DivisionByZero, FieldMismatch, NonPrimeModulus
from annihilator.field import GF2, QQ, FieldElement, inv, is_prime, make_field, parse_field

GF3 = make_field("prime", 3)
GF5 = make_field("prime", 5)
GF101 = make_field("prime", 101)


def test_make_field_examples():
    assert make_field("prime", 2).char == 2
    assert make_field("rational").is_rational
    with pytest.raises(NonPrimeModulus):
        make_field("prime", 4)


@pytest.mark.parametrize("p", [0, 1, 4, 9, 561, 2**31 - 2, 3215031751])
def test_non_prime_rejected(p):
    with pytest.raises(NonPrimeModulus):
        make_field("prime", p)


def test_modulus_bound():
    assert make_field("prime", 2**31 - 1).char == 2**31 - 1
    with pytest.raises(NonPrimeModulus):
        make_field("prime", 2**31 + 11)


def test_make_field_idempotent():
    assert make_field("prime", 7) == make_field("prime", 7)
    assert make_field("prime", 7) is make_field("prime", 7)


def test_is_prime_against_trial_division():
    def slow(n):
        return n >= 2 and all(n % k for k in range(2, int(n**0.5) + 1))

    assert [n for n in range(5000) if is_prime(n)] == [n for n in range(5000) if slow(n)]


@pytest.mark.parametrize(
    "text, char", [("gf2", 2), ("GF101", 101), ("q", 0), ("gf7", 7)]
)
def test_parse_field(text, char):
    assert parse_field(text).char == char


@pytest.mark.parametrize("text", ["gf4", "gf", "r", "gf1", "f2"])
def test_parse_field_rejects(text):
    with pytest.raises(ValueError):
        parse_field(text)


def test_inv_examples():
    assert inv(GF5(2)) == GF5(3)
    assert GF5(2) * GF5(3) == GF5.one
    assert inv(GF2(1)) == GF2(1)
    assert inv(QQ(Fraction(3, 4))) == QQ(Fraction(4, 3))


def test_inv_zero():
    with pytest.raises(DivisionByZero):
        inv(GF5(0))
    with pytest.raises(ZeroDivisionError):
        inv(QQ(0))


def test_canonical_values():
    assert GF5(-1).value == 4
    assert GF5(12).value == 2
    assert GF5("3/2").value == 4  # 3 * 2^-1 = 3 * 3
    assert QQ("6/4").value == Fraction(3, 2)
    assert QQ(Fraction(-2, -4)).value == Fraction(1, 2)
    assert str(QQ("-4/6")) == "-2/3"


def test_fields_do_not_mix():
    with pytest.raises(FieldMismatch):
        GF3(1) + GF5(1)
    with pytest.raises(FieldMismatch):
        GF5.coerce(GF3(2))


@pytest.mark.parametrize("F", [GF2, GF3, GF101, QQ], ids=repr)
def test_field_axioms(F):
    rng = random.Random(F.char)

    def draw():
        if F.is_rational:
            return F(Fraction(rng.randint(-50, 50), rng.randint(1, 50)))
        return F(rng.randrange(F.char))

    for _ in range(10**4):
        a, b, c = draw(), draw(), draw()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a and a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == F.zero
        assert a - b == a + (-b)
        if a:
            assert a * inv(a) == F.one


@given(st.integers(), st.sampled_from([GF2, GF3, GF101]))
def test_normalising_twice_is_normalising_once(n, F):
    once = F.reduce(n)
    assert F.reduce(once) == once
    assert 0 <= once < F.char


@given(st.fractions())
def test_rational_normal_form(x):
    once = QQ.reduce(x)
    assert QQ.reduce(once) == once
    assert once.denominator > 0


def test_element_repr_and_hash():
    assert repr(GF5(3)) == "GF(5)(3)"
    assert len({GF5(3), GF5(8), GF3(0)}) == 2
    assert FieldElement(GF5, 3) == 3
