"""Polynomial kernel: division, gcd, canonical forms."""

import pytest
from hypothesis import given, settings, strategies as st

from qcongr.errors import BothZero, DivisionByZeroPoly, NonExactDivision
from qcongr.poly import (
    ONE,
    Poly,
    Q,
    ZERO,
    divides,
    poly_content,
    poly_divrem,
    poly_exact_div,
    poly_gcd,
)
from qcongr.scalars import Rat


def P(*coeffs):
    return Poly(list(coeffs))


class TestCanonicalForm:
    def test_trailing_zeros_trimmed(self):
        assert P(1, 2, 0, 0) == P(1, 2)
        assert P(0, 0).is_zero()

    def test_degree_sentinel(self):
        assert ZERO.degree == -1
        assert ONE.degree == 0
        assert P(0, 0, 5).degree == 2

    def test_from_pairs(self):
        assert Poly.from_pairs([(3, 1), (0, 2)]) == P(2, 0, 0, 1)
        assert Poly.from_pairs([(1, 1), (1, -1)]).is_zero()

    def test_qpow(self):
        assert Poly.qpow(0) == ONE
        assert Poly.qpow(3) == P(0, 0, 0, 1)


class TestArithmetic:
    def test_ring_ops(self):
        a, b = P(1, 1), P(1, -1)
        assert a * b == P(1, 0, -1)
        assert a + b == P(2)
        assert a - a == ZERO
        assert -a == P(-1, -1)

    def test_pow(self):
        assert P(1, 1) ** 2 == P(1, 2, 1)
        assert P(1, 1) ** 0 == ONE

    def test_scalar_mixing(self):
        assert P(1, 1) + 1 == P(2, 1)
        assert 2 - Q == P(2, -1)

    def test_eval(self):
        assert P(1, 2, 3).eval(Rat(1, 2)) == Rat(11, 4)

    def test_subs_qpow(self):
        # [2] under q -> q^3 is 1 + q^3
        assert P(1, 1).subs_qpow(3) == P(1, 0, 0, 1)

    def test_shift(self):
        assert P(1, 1).shift(2) == P(0, 0, 1, 1)


class TestDivRem:
    def test_difference_of_squares(self):
        q, r = poly_divrem(P(-1, 0, 1), P(-1, 1))
        assert (q, r) == (P(1, 1), ZERO)

    def test_gaussian_binomial_factors(self):
        q, r = poly_divrem(P(1, 1, 2, 1, 1), P(1, 1, 1))
        assert (q, r) == (P(1, 0, 1), ZERO)

    def test_with_remainder(self):
        q, r = poly_divrem(P(0, 0, 0, 1), P(-1, 1))
        assert (q, r) == (P(1, 1, 1), ONE)

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZeroPoly):
            poly_divrem(ONE, ZERO)

    @given(
        st.lists(st.integers(-9, 9), max_size=8),
        st.lists(st.integers(-9, 9), min_size=1, max_size=5),
    )
    @settings(max_examples=60, deadline=None, derandomize=True)
    def test_reconstruction(self, ac, bc):
        a, b = Poly(ac), Poly(bc)
        if b.is_zero():
            return
        quot, rem = poly_divrem(a, b)
        assert b * quot + rem == a
        assert rem.degree < b.degree


class TestGcd:
    def test_common_root(self):
        assert poly_gcd(P(-1, 0, 1), P(-1, 0, 0, 1)) == P(-1, 1)

    def test_repeated_factor(self):
        f = P(1, 1, 1)
        assert poly_gcd(f * f, f * P(1, 1)) == f

    def test_coprime(self):
        assert poly_gcd(P(1, 0, 1), P(2, 1)) == ONE

    def test_both_zero(self):
        with pytest.raises(BothZero):
            poly_gcd(ZERO, ZERO)

    @given(
        st.lists(st.integers(-5, 5), min_size=1, max_size=4),
        st.lists(st.integers(-5, 5), min_size=1, max_size=4),
        st.lists(st.integers(-5, 5), min_size=1, max_size=3),
    )
    @settings(max_examples=40, deadline=None, derandomize=True)
    def test_divides_and_scaling(self, ac, bc, cc):
        a, b, c = Poly(ac), Poly(bc), Poly(cc)
        if a.is_zero() or b.is_zero():
            return
        g = poly_gcd(a, b)
        assert divides(g, a) and divides(g, b)
        if not c.is_zero():
            assert poly_gcd(a * c, b * c) == c.monic() * g


class TestExactDivision:
    def test_exact(self):
        assert poly_exact_div(P(1, 2, 1), P(1, 1)) == P(1, 1)

    def test_non_exact(self):
        with pytest.raises(NonExactDivision):
            poly_exact_div(P(1, 1, 1), P(1, 1))

    def test_content(self):
        assert poly_content(P(Rat(2, 3), Rat(4, 3))) == Rat(2, 3)


class TestTextForm:
    def test_sparse_ascending(self):
        assert str(P(1, 0, 0, 3)) == "1 + 3*q^3"
        assert str(ZERO) == "0"
        assert str(P(0, -1)) == "-q"
        assert str(P(Rat(1, 2))) == "1/2"
