"""Congruence engine: reduction, modular inversion, and relation laws."""

import pytest
from hypothesis import given, settings, strategies as st

from qcongr.congruence import (
    ModRing,
    Modulus,
    congruent,
    poly_modinv,
    poly_powmod,
    reduce_mod,
    reduce_poly,
)
from qcongr.errors import DenominatorNotCoprime, InvalidModulus, NotInvertible
from qcongr.poly import ONE, Poly, Q, poly_gcd
from qcongr.primes import primes_in_range
from qcongr.qobjects import q_binomial, q_int
from qcongr.ratfun import RatFun
from qcongr.scalars import is_integer


def test_modulus_validation():
    m = Modulus(5, 2)
    assert m.poly == q_int(5) ** 2
    assert m.phi == q_int(5)
    for bad in [(4, 1), (2, 1), (9, 1), (5, 0)]:
        with pytest.raises(InvalidModulus):
            Modulus(*bad)


class TestCongruent:
    def test_gaussian_binomial_mod_3(self):
        assert congruent(RatFun.from_poly(q_binomial(4, 2)), RatFun.const(0), Modulus(3)).holds

    def test_qp_is_one(self):
        assert congruent(RatFun.from_poly(Poly.qpow(5)), RatFun.const(1), Modulus(5)).holds

    def test_denominator_is_modulus(self):
        with pytest.raises(DenominatorNotCoprime):
            congruent(RatFun(ONE, q_int(3)), RatFun.const(0), Modulus(3))

    def test_failure_witness(self):
        res = congruent(RatFun.from_poly(Q), RatFun.const(1), Modulus(3))
        assert not res.holds
        assert res.witness == Poly([-1, 1])


class TestModInv:
    def test_hand_example(self):
        assert poly_modinv(Poly([1, 1]), Modulus(3)) == Poly([0, -1])

    def test_identity(self):
        assert poly_modinv(ONE, Modulus(7, 2)) == ONE

    def test_not_invertible(self):
        with pytest.raises(NotInvertible):
            poly_modinv(q_int(3), Modulus(3))

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=4), st.integers(1, 2))
    @settings(max_examples=40, deadline=None, derandomize=True)
    def test_inverse_property(self, coeffs, r):
        m = Modulus(5, r)
        d = Poly(coeffs)
        if d.is_zero() or not poly_gcd(d, m.phi).is_one():
            return
        u = poly_modinv(d, m)
        assert reduce_poly(d * u, m) == ONE


class TestReduceMod:
    def test_examples(self):
        assert reduce_mod(RatFun.from_poly(Poly.qpow(5)), Modulus(5)) == ONE
        assert reduce_mod(RatFun(ONE, Poly([1, 1])), Modulus(3)) == Poly([0, -1])
        assert reduce_mod(RatFun.from_poly(q_int(5)), Modulus(5, 2)) == q_int(5)

    def test_multiplicativity(self):
        m = Modulus(5, 2)
        f = RatFun(q_binomial(6, 2), Poly([1, 1]))
        g = RatFun(q_int(7), Poly([1, 0, 1]))
        lhs = reduce_mod(f * g, m)
        rhs = reduce_poly(reduce_mod(f, m) * reduce_mod(g, m), m)
        assert lhs == rhs

    def test_not_invertible(self):
        with pytest.raises(NotInvertible):
            reduce_mod(RatFun(ONE, q_int(5)), Modulus(5))


def test_equivalence_relation():
    m = Modulus(5)
    pool = [
        RatFun.from_poly(q_binomial(6, 3)),
        RatFun(q_int(7), Poly([1, 1])),
        RatFun(Poly([2, 0, 1]), Poly([1, 0, 1])),
    ]
    shifted = [f + RatFun.from_poly(m.poly) for f in pool]
    for f in pool:
        assert congruent(f, f, m).holds  # reflexive
    for f, g in zip(pool, shifted):
        assert congruent(f, g, m).holds == congruent(g, f, m).holds  # symmetric
        assert congruent(f, g, m).holds
    # transitive: f ~ f + [p], f + [p] ~ f + 2[p] => f ~ f + 2[p]
    f = pool[0]
    g = f + RatFun.from_poly(m.poly)
    h = g + RatFun.from_poly(m.poly)
    assert congruent(f, g, m).holds and congruent(g, h, m).holds
    assert congruent(f, h, m).holds


def test_q_coprime_to_every_modulus():
    for p in primes_in_range(3, 31):
        assert poly_gcd(Q, q_int(p)).is_one()


def test_powmod_matches_naive():
    m = Modulus(7, 2)
    base = Poly([1, 2, 1])
    for e in range(6):
        assert poly_powmod(base, e, m) == reduce_poly(base**e, m)
    inv = poly_powmod(base, -2, m)
    assert reduce_poly(inv * base * base, m) == ONE


def test_powmod_huge_exponent():
    # exponents like floor(p^4/5) appear in the checks; must stay cheap
    m = Modulus(7)
    e = 31**4 // 5
    assert poly_powmod(Q, e, m) == reduce_poly(Poly.qpow(e % 7), m)


def test_gauss_integrality_of_witness():
    # when both sides have integer coefficients, the quotient by [p]^r does too
    from qcongr.poly import poly_exact_div

    diff = q_binomial(4, 2)  # == (1+q^2) * [3]_q
    h = poly_exact_div(diff, q_int(3))
    assert all(is_integer(h.coeff(e)) for e in range(h.degree + 1))
    assert h == Poly([1, 0, 1])


def test_modring_caches_are_consistent():
    m = Modulus(7, 2)
    ring = ModRing(m)
    assert ring.qint(5) == reduce_poly(q_int(5), m)
    assert reduce_poly(ring.inv(ring.qint(5)) * q_int(5), m) == ONE
    assert ring.qpow(100) == reduce_poly(Poly.qpow(100), m)
    assert ring.qint_pow(5, -2) == reduce_poly(ring.inv(ring.qint(5)) ** 2, m)
