from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamtwist.scalars import (QQ, ContextError, Mod, PrimeField, Rat, binomial,
                              gbinomial, is_prime, multi_binomial,
                              multi_factorial, reduce_mod_p)

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=10**4)
residues_p5 = st.integers(min_value=0, max_value=4)


def test_binomial_examples():
    assert binomial(4, 2) == 6
    assert binomial(2, 1) == 2  # the divided square x^(e1) x^(e1) = 2 x^(2e1)
    assert binomial(1, 3) == 0
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_gbinomial_negative_upper():
    assert gbinomial(-1, 2) == 1
    assert gbinomial(-3, 3) == -10
    assert gbinomial(5, 0) == 1
    assert gbinomial(2, 5) == 0


def test_multi_binomial_examples():
    assert multi_binomial((0, 1), (0, 1)) == 2
    assert multi_binomial((0, 0), (3, 7)) == 1
    # n=2 example evaluated by hand: C(2,1) C(1,1) C(2,0) C(0,0) = 2
    assert multi_binomial((1, 1, 0, 0), (1, 0, 2, 0)) == 2
    with pytest.raises(ValueError):
        multi_binomial((1,), (1, 2))


def test_multi_binomial_symmetric():
    for a, b in [((1, 2), (3, 0)), ((2, 2, 1, 0), (0, 1, 1, 3))]:
        assert multi_binomial(a, b) == multi_binomial(b, a)


def test_multi_factorial():
    assert multi_factorial((2, 1)) == 2
    assert multi_factorial((3, 2, 1, 0)) == 12


def test_reduce_mod_p_examples():
    # extended-Euclid oracle: 2^(-1) = 3 mod 5, so 3/2 = 3*3 = 9 = 4 mod 5
    assert pow(2, -1, 5) == 3
    assert reduce_mod_p(Fraction(3, 2), 5) == Mod(4, 5)
    assert reduce_mod_p(Fraction(0), 7) == Mod(0, 7)
    with pytest.raises(ZeroDivisionError):
        reduce_mod_p(Fraction(1, 3), 3)


@given(rationals, rationals)
@settings(max_examples=60)
def test_reduce_mod_p_is_multiplicative(a, b):
    p = 7
    if a.denominator % p == 0 or b.denominator % p == 0 or (a * b).denominator % p == 0:
        return
    assert reduce_mod_p(a * b, p) == reduce_mod_p(a, p) * reduce_mod_p(b, p)
    assert reduce_mod_p(a + b, p) == reduce_mod_p(a, p) + reduce_mod_p(b, p)


@given(rationals, rationals, rationals)
@settings(max_examples=50)
def test_rational_field_axioms(a, b, c):
    ra, rb, rc = Rat(a), Rat(b), Rat(c)
    assert (ra + rb) + rc == ra + (rb + rc)
    assert ra * (rb + rc) == ra * rb + ra * rc
    assert ra + (-ra) == Rat(0)
    if not rb.is_zero():
        assert (ra / rb) * rb == ra


@given(residues_p5, residues_p5, residues_p5)
@settings(max_examples=50)
def test_prime_field_axioms(a, b, c):
    p = 5
    ma, mb, mc = Mod(a, p), Mod(b, p), Mod(c, p)
    assert (ma + mb) + mc == ma + (mb + mc)
    assert ma * (mb + mc) == ma * mb + ma * mc
    assert ma + (-ma) == Mod(0, p)
    if not mb.is_zero():
        assert (ma / mb) * mb == ma
        assert mb * mb.inverse() == Mod(1, p)


def test_context_mixing_rejected():
    with pytest.raises(ContextError):
        Rat(1) + Mod(1, 3)
    with pytest.raises(ContextError):
        Mod(1, 3) * Rat(2)
    with pytest.raises(ContextError):
        Mod(1, 3) + Mod(1, 5)
    with pytest.raises(ContextError):
        Mod(1, 3) == Mod(1, 5)


def test_prime_field_validates():
    with pytest.raises(ValueError):
        PrimeField(6)
    assert PrimeField(5) is PrimeField(5)
    assert is_prime(2) and is_prime(97) and not is_prime(1) and not is_prime(91)


def test_rational_canonical_form():
    r = Rat(Fraction(6, -4))
    assert r.numerator == -3 and r.denominator == 2
    assert QQ(2) == Rat(2)
    assert PrimeField(5)(Fraction(3, 2)) == Mod(4, 5)
