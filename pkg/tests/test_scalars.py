from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from brauercat.scalars import (
    DELTA,
    ONE,
    ZERO,
    DeltaPolynomial,
    evaluate,
    f_m_polynomial,
    falling_factorial,
    poly_arith,
    poly_gcd,
    rational_from_str,
    rational_to_str,
)

rationals = st.builds(Fraction, st.integers(-30, 30), st.integers(1, 12))
polys = st.lists(rationals, max_size=5).map(DeltaPolynomial)


def P(*coeffs):
    return DeltaPolynomial(coeffs)


class TestRationalText:
    def test_integer_has_no_denominator(self):
        assert rational_to_str(Fraction(6, 3)) == "2"

    def test_fraction_in_lowest_terms(self):
        assert rational_to_str(Fraction(4, -6)) == "-2/3"

    @given(rationals)
    def test_roundtrip(self, x):
        assert rational_from_str(rational_to_str(x)) == x

    def test_rejects_non_string(self):
        with pytest.raises(ValueError):
            rational_from_str(3)


class TestPolyArith:
    def test_monomial_product(self):
        assert poly_arith(DELTA - 1, DELTA, "mul") == P(0, -1, 1)

    def test_additive_identity(self):
        p = P(1, 2, 3)
        assert poly_arith(p, ZERO, "add") == p

    def test_expansion_matches_falling_factorial(self):
        prod = poly_arith(DELTA - 2, DELTA + 1, "mul")
        assert prod == P(-2, -1, 1)
        assert prod == falling_factorial(2) - factorial(2)

    def test_zero_is_empty(self):
        assert (DELTA - DELTA).coeffs == ()
        assert ZERO.is_zero()

    def test_trailing_zeros_trimmed(self):
        assert P(1, 0, 0).coeffs == (Fraction(1),)
        assert P(1, 2, 0).degree == 1

    def test_unknown_op(self):
        with pytest.raises(ValueError):
            poly_arith(ONE, ONE, "div")

    @given(polys, polys, polys)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        assert a - a == ZERO
        assert a * ONE == a

    @given(polys, polys, rationals)
    def test_evaluation_is_a_ring_map(self, a, b, x):
        assert evaluate(a * b, x) == evaluate(a, x) * evaluate(b, x)
        assert evaluate(a + b, x) == evaluate(a, x) + evaluate(b, x)


class TestEvaluate:
    def test_root(self):
        assert evaluate(DELTA - 2, 2) == 0

    def test_falling_product_at_three(self):
        assert evaluate(DELTA * (DELTA - 1) * (DELTA - 2), 3) == 6

    def test_second_root(self):
        assert evaluate(P(-2, -1, 1), -1) == 0

    def test_rational_argument(self):
        assert evaluate(P(0, 0, 1), Fraction(1, 3)) == Fraction(1, 9)


class TestFallingFactorial:
    def test_empty_product(self):
        assert falling_factorial(0) == ONE

    def test_two(self):
        assert falling_factorial(2) == P(0, -1, 1)

    @pytest.mark.parametrize("m", range(2, 7))
    def test_value_at_m_is_m_factorial(self, m):
        assert evaluate(falling_factorial(m), m) == factorial(m)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            falling_factorial(-1)


class TestFm:
    def test_m2(self):
        assert f_m_polynomial(2) == DELTA - 2

    def test_m3(self):
        f3 = f_m_polynomial(3)
        assert f3 == P(0, -3, 1)
        assert evaluate(f3, 0) == 0 and evaluate(f3, 3) == 0

    @pytest.mark.parametrize("m", range(2, 7))
    def test_vanishes_at_m(self, m):
        assert evaluate(f_m_polynomial(m), m) == 0

    def test_m_below_two_rejected(self):
        with pytest.raises(ValueError):
            f_m_polynomial(1)


class TestGcd:
    def test_m2_instance(self):
        assert poly_gcd(P(-2, -1, 1), DELTA - 2) == DELTA - 2

    @given(st.lists(rationals, min_size=1, max_size=5).map(lambda c: DeltaPolynomial(c + [Fraction(1)])))
    def test_self_gcd_is_monic(self, p):
        assert poly_gcd(p, p) == p.monic()

    def test_m3_instance(self):
        assert poly_gcd(falling_factorial(3) - 6, f_m_polynomial(3)) == DELTA - 3

    @pytest.mark.parametrize("m", range(2, 7))
    def test_joint_root_is_m(self, m):
        assert poly_gcd(falling_factorial(m) - factorial(m), f_m_polynomial(m)) == DELTA - m

    def test_both_zero_rejected(self):
        with pytest.raises(ValueError):
            poly_gcd(ZERO, ZERO)

    @given(polys, polys)
    def test_gcd_divides_both(self, a, b):
        if a.is_zero() and b.is_zero():
            return
        g = poly_gcd(a, b)
        assert g.leading() == 1
        for p in (a, b):
            assert p.divmod(g)[1] == ZERO


class TestJson:
    def test_ascending_powers(self):
        assert (DELTA * DELTA - Fraction(1, 2)).to_json() == ["-1/2", "0", "1"]

    @given(polys)
    def test_roundtrip(self, p):
        assert DeltaPolynomial.from_json(p.to_json()) == p

    def test_display(self):
        assert str(P(-2, -1, 1)) == "δ^2 - δ - 2"
