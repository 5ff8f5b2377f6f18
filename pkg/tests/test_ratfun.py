"""Rational functions: canonical reduction, ring laws, limits at q = 1."""

import pytest
from hypothesis import given, settings, strategies as st

from qcongr.errors import DivisionByZero, PoleAtOne
from qcongr.poly import ONE, Poly, poly_gcd
from qcongr.qobjects import q_int
from qcongr.ratfun import RatFun, q_power, ratfun_arith, ratfun_limit_at_one
from qcongr.scalars import Rat


def P(*coeffs):
    return Poly(list(coeffs))


def test_common_denominator_collapses():
    one_plus_q = P(1, 1)
    assert RatFun(ONE, one_plus_q) + RatFun(P(0, 1), one_plus_q) == RatFun.const(1)


def test_additive_inverses():
    assert RatFun(ONE, P(-1, 1)) + RatFun(ONE, P(1, -1)) == RatFun.const(0)


def test_qh1_instance_at_p3():
    # (1 + 1/(1+q)) - (1-q) = (1+q+q^2)/(1+q)
    lhs = RatFun.const(1) + RatFun(ONE, P(1, 1)) - RatFun.from_poly(P(1, -1))
    assert lhs == RatFun(P(1, 1, 1), P(1, 1))


def test_canonical_invariants():
    r = RatFun(P(0, 2, 2), P(0, 0, 4))  # (2q+2q^2) / 4q^2
    assert r.den.is_monic()
    assert poly_gcd(r.num, r.den) == ONE
    assert r == RatFun(P(1, 1), P(0, 2))


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        RatFun.const(1) / RatFun.const(0)
    with pytest.raises(DivisionByZero):
        RatFun(ONE, Poly())


def test_ratfun_arith_dispatch():
    x, y = RatFun(ONE, P(1, 1)), RatFun.const(2)
    assert ratfun_arith(x, y, "add") == x + y
    assert ratfun_arith(x, y, "sub") == x - y
    assert ratfun_arith(x, y, "mul") == x * y
    assert ratfun_arith(x, y, "div") == x / y


def test_q_power():
    assert q_power(0) == RatFun.const(1)
    assert q_power(3) == RatFun.from_poly(P(0, 0, 0, 1))
    assert q_power(-2) == RatFun(ONE, P(0, 0, 1))


class TestLimitAtOne:
    def test_cancels_shared_root(self):
        # (1-q^6)/(1-q^3) -> 1+q^3 -> 2
        f = RatFun(Poly.from_pairs([(0, 1), (6, -1)]), Poly.from_pairs([(0, 1), (3, -1)]))
        assert f.limit_at_one() == 2

    def test_q_integer(self):
        f = RatFun(Poly.from_pairs([(0, 1), (5, -1)]), P(1, -1))
        assert f.limit_at_one() == 5

    def test_pole(self):
        with pytest.raises(PoleAtOne):
            RatFun(ONE, P(1, -1)).limit_at_one()

    def test_q_int_bridge(self):
        for n in range(1, 51):
            assert ratfun_limit_at_one(RatFun.from_poly(q_int(n))) == n


@st.composite
def small_ratfun(draw):
    num = Poly(draw(st.lists(st.integers(-6, 6), max_size=4)))
    den = Poly(draw(st.lists(st.integers(-6, 6), min_size=1, max_size=3)))
    if den.is_zero():
        den = Poly([1, 1])
    return RatFun(num, den)


@given(small_ratfun(), small_ratfun(), small_ratfun())
@settings(max_examples=40, deadline=None, derandomize=True)
def test_ring_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(small_ratfun())
@settings(max_examples=40, deadline=None, derandomize=True)
def test_sub_and_neg(x):
    assert x - x == RatFun.const(0)
    assert x + (-x) == RatFun.const(0)


def test_eval():
    f = RatFun(P(1, 1), P(0, 1))
    assert f.eval(Rat(1, 2)) == 3
