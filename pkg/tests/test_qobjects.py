"""q-objects: q-integers, Pochhammer symbols, Gaussian binomials,
Legendre symbols, and the q-Fermat quotient."""

import pytest

from qcongr.errors import InvalidModulus
from qcongr.poly import ONE, Poly, ZERO
from qcongr.primes import primes_in_range
from qcongr.qobjects import (
    legendre,
    q_binomial,
    q_fermat_quotient,
    q_int,
    q_pochhammer,
)
from qcongr.ratfun import RatFun, ratfun_limit_at_one
from qcongr.scalars import Rat, is_integer


def test_q_int():
    assert q_int(0) == ZERO
    assert q_int(1) == ONE
    assert q_int(4) == Poly([1, 1, 1, 1])


def test_q_pochhammer():
    assert q_pochhammer(1, 1, 1) == Poly([1, -1])
    assert q_pochhammer(-1, 1, 2) == Poly([1, 1, 1, 1])  # (1+q)(1+q^2)
    assert q_pochhammer(1, 0, 0) == ONE
    assert q_pochhammer(-1, 3, 0) == ONE


class TestQBinomial:
    def test_small_values(self):
        assert q_binomial(2, 1) == Poly([1, 1])
        assert q_binomial(4, 2) == Poly([1, 1, 2, 1, 1])
        assert q_binomial(3, 5) == ZERO
        assert q_binomial(5, -1) == ZERO
        assert q_binomial(7, 0) == ONE

    def test_pascal_consistency(self):
        for n in range(1, 31):
            for k in range(n + 1):
                expected = q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)
                assert q_binomial(n, k) == expected

    def test_pascal_above_memo_limit(self):
        # the product-formula regime must satisfy the same recurrence
        n = 70
        for k in (1, 3, 35):
            expected = q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)
            assert q_binomial(n, k) == expected

    def test_shape_properties(self):
        for n in range(31):
            for k in range(n + 1):
                b = q_binomial(n, k)
                coeffs = [b.coeff(e) for e in range(b.degree + 1)]
                assert b.degree == k * (n - k)
                assert all(is_integer(c) and c >= 0 for c in coeffs)
                assert coeffs == coeffs[::-1]  # palindromic
                assert b == q_binomial(n, n - k)

    def test_product_formula_oracle(self):
        for n in range(13):
            for k in range(n + 1):
                num = q_pochhammer(1, 1, n)
                den = q_pochhammer(1, 1, k) * q_pochhammer(1, 1, n - k)
                assert RatFun(num, den) == RatFun.from_poly(q_binomial(n, k))

    def test_q_multiplicativity(self):
        # [mn] = [m] at q^n, times [n]
        for m in range(1, 11):
            for n in range(1, 11):
                assert q_int(m * n) == q_int(m).subs_qpow(n) * q_int(n)

    def test_q_binomial_theorem(self):
        # sum_k qbin(n,k) prod_{j<k} (x - q^j) == x^n at rational points
        for n in range(21):
            for x in (Rat(-1), Rat(2), Rat(1, 3)):
                total = Rat(0)
                prod = Rat(1)
                for k in range(n + 1):
                    total += q_binomial(n, k).eval(Rat(3, 2)) * prod
                    prod *= x - Rat(3, 2) ** k
                assert total == x**n


class TestLegendre:
    def test_values(self):
        assert legendre(7, 3) == 1
        assert legendre(5, 3) == -1
        assert legendre(11, 5) == 1
        assert legendre(2, 5) == -1
        assert legendre(10, 5) == 0

    def test_requires_odd_prime_modulus(self):
        with pytest.raises(InvalidModulus):
            legendre(7, 4)
        with pytest.raises(InvalidModulus):
            legendre(7, 2)


class TestQFermatQuotient:
    def test_p3(self):
        assert q_fermat_quotient(3) == Poly([0, 1])

    def test_p5(self):
        assert q_fermat_quotient(5) == Poly.from_pairs([(1, 1), (3, 1), (6, 1)])

    def test_reconstruction(self):
        for p in primes_in_range(3, 31):
            qf = q_fermat_quotient(p)
            assert qf * q_int(p) + 1 == q_pochhammer(-1, 1, p - 1)

    def test_integer_coeffs_and_classical_limit(self):
        for p in primes_in_range(3, 31):
            qf = q_fermat_quotient(p)
            assert all(is_integer(qf.coeff(e)) for e in range(qf.degree + 1))
            limit = ratfun_limit_at_one(RatFun.from_poly(qf))
            assert limit == Rat(2 ** (p - 1) - 1, p)
