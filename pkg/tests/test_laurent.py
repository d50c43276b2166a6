"""Exact Laurent-scalar arithmetic, canonical printing, and limits."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from projlim import DivergentLimit, LaurentScalar
from projlim.parsing import parse_scalar

ZERO = LaurentScalar.zero()
ONE = LaurentScalar.constant(1)
T = LaurentScalar.t(1)


def scalars(max_terms: int = 4, max_exp: int = 5):
    coeff = st.fractions(
        min_value=-6, max_value=6, max_denominator=4
    )
    term = st.tuples(st.integers(-max_exp, max_exp), coeff)
    return st.lists(term, max_size=max_terms).map(
        lambda terms: LaurentScalar({e: c for e, c in terms})
    )


class TestArithmetic:
    def test_zero_and_one(self):
        assert ZERO.is_zero()
        assert not ONE.is_zero()
        assert ONE + ZERO == ONE
        assert ONE * ZERO == ZERO

    def test_mixed_with_fractions(self):
        x = LaurentScalar({1: Fraction(2), 0: Fraction(1)})
        assert Fraction(3) * x == x * 3 == LaurentScalar({1: 6, 0: 3})
        assert Fraction(1, 2) + x == x + Fraction(1, 2) == LaurentScalar(
            {1: 2, 0: Fraction(3, 2)}
        )

    def test_powers_of_t(self):
        assert T * T == LaurentScalar.t(2)
        assert T * LaurentScalar.t(-1) == ONE

    def test_subtraction_cancels(self):
        x = LaurentScalar({2: 5, -1: 3})
        assert (x - x).is_zero()

    @given(scalars(), scalars(), scalars())
    @settings(max_examples=60, deadline=None)
    def test_ring_laws(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(scalars())
    @settings(max_examples=60, deadline=None)
    def test_additive_inverse(self, a):
        assert (a + (-a)).is_zero()


class TestLimits:
    def test_constant_limit(self):
        assert LaurentScalar.constant(Fraction(7, 3)).limit_at_zero() == Fraction(7, 3)

    def test_vanishing_limit(self):
        assert (T * 5).limit_at_zero() == 0

    def test_divergent_limit(self):
        with pytest.raises(DivergentLimit):
            LaurentScalar.t(-1).limit_at_zero()

    def test_constant_value_raises_on_nonconstant(self):
        with pytest.raises(DivergentLimit):
            (T + ONE).constant_value()

    @given(scalars())
    @settings(max_examples=60, deadline=None)
    def test_limit_matches_zero_coefficient(self, a):
        if a.is_zero() or a.min_exponent() >= 0:
            assert a.limit_at_zero() == a.coefficient(0)
        else:
            with pytest.raises(DivergentLimit):
                a.limit_at_zero()


class TestPrinting:
    def test_canonical_strings(self):
        assert str(ZERO) == "0"
        assert str(ONE) == "1"
        assert str(T) == "t"
        assert str(LaurentScalar({-1: 1})) == "t^-1"
        assert str(LaurentScalar({2: Fraction(-3, 2)})) == "-3/2*t^2"

    def test_sorted_by_exponent(self):
        x = LaurentScalar({3: 1, -2: 2, 0: -1})
        assert str(x) == "2*t^-2 - 1 + t^3"

    @given(scalars())
    @settings(max_examples=80, deadline=None)
    def test_parse_roundtrip(self, a):
        assert parse_scalar(str(a)) == a
