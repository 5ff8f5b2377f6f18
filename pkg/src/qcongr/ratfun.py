"""Reduced rational functions in q.

Canonical form: denominator monic and nonzero, gcd(num, den) = 1, zero is
0/1.  Equal values therefore have equal representations, so __eq__ is a
structural comparison.
"""

from __future__ import annotations

from .errors import DivisionByZero, PoleAtOne
from .poly import ONE, Poly, ZERO, poly_divrem, poly_exact_div, poly_gcd, str_ratfun
from .scalars import Rat


class RatFun:
    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = _poly(num)
        den = _poly(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        g = poly_gcd(num, den)
        if not g.is_one():
            num = poly_exact_div(num, g)
            den = poly_exact_div(den, g)
        lead = den.leading()
        if lead != 1:
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        self.num, self.den = num, den

    @staticmethod
    def _coprime(num: Poly, den: Poly) -> "RatFun":
        """Trusted constructor: den monic, gcd(num, den) = 1 already."""
        r = RatFun.__new__(RatFun)
        if num.is_zero():
            r.num, r.den = ZERO, ONE
        else:
            r.num, r.den = num, den
        return r

    @staticmethod
    def from_poly(p) -> "RatFun":
        return RatFun._coprime(_poly(p), ONE)

    @staticmethod
    def const(v) -> "RatFun":
        return RatFun._coprime(Poly.const(v), ONE)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.is_one()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        if g.is_one():
            return RatFun._coprime_add(self, other)
        d1 = poly_exact_div(self.den, g)
        d2 = poly_exact_div(other.den, g)
        num = self.num * d2 + other.num * d1
        return RatFun(num, d1 * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun._coprime(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return RF_ZERO
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1 = self.num if g1.is_one() else poly_exact_div(self.num, g1)
        d2 = other.den if g1.is_one() else poly_exact_div(other.den, g1)
        n2 = other.num if g2.is_one() else poly_exact_div(other.num, g2)
        d1 = self.den if g2.is_one() else poly_exact_div(self.den, g2)
        return RatFun(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other.is_zero():
            raise DivisionByZero("division by zero rational function")
        return self * RatFun(other.den, other.num)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, e: int):
        if e == 0:
            return RF_ONE
        if e < 0:
            return (RF_ONE / self) ** (-e)
        return RatFun._coprime(self.num**e, self.den**e)

    @staticmethod
    def _coprime_add(x: "RatFun", y: "RatFun") -> "RatFun":
        num = x.num * y.den + y.num * x.den
        den = x.den * y.den
        # gcd(num, den) = gcd(x.num * y.den, x.den) * gcd(..., y.den) = 1
        return RatFun._coprime(num, den) if num else RF_ZERO

    # -- analysis ----------------------------------------------------------

    def limit_at_one(self):
        """Value of the q -> 1 limit as an exact rational.

        Cancels the common multiplicity of (q - 1) between numerator and
        denominator; raises PoleAtOne when the result diverges.
        """
        if self.is_zero():
            return Rat(0)
        num, den = self.num, self.den
        vn, num1 = _strip_qm1(num)
        vd, den1 = _strip_qm1(den)
        if vn < vd:
            raise PoleAtOne("pole of order %d at q = 1" % (vd - vn))
        if vn > vd:
            return Rat(0)
        return num1.eval(1) / den1.eval(1)

    def eval(self, x):
        """Value at a rational point where the denominator does not vanish."""
        d = self.den.eval(x)
        if not d:
            raise ZeroDivisionError("denominator vanishes at %s" % (x,))
        return self.num.eval(x) / d

    def __str__(self):
        return str_ratfun(self.num, self.den)

    def __repr__(self):
        return "RatFun(%s)" % self


_QM1 = Poly([-1, 1])


def _strip_qm1(p: Poly):
    """Return (multiplicity of (q-1) in p, cofactor)."""
    v = 0
    while p.eval(1) == 0:
        p, _ = poly_divrem(p, _QM1)
        v += 1
    return v, p


def _poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Rat)):
        return Poly.const(x)
    raise TypeError("cannot coerce %r to Poly" % (x,))


def _coerce(x) -> RatFun:
    if isinstance(x, RatFun):
        return x
    return RatFun.from_poly(_poly(x))


RF_ZERO = RatFun._coprime(ZERO, ONE)
RF_ONE = RatFun._coprime(ONE, ONE)


def ratfun_arith(x: RatFun, y: RatFun, op: str) -> RatFun:
    """Dispatch form of the four field operations (add, sub, mul, div)."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError("unknown operation %r" % op)


def ratfun_limit_at_one(x: RatFun):
    return x.limit_at_one()


def q_power(e: int) -> RatFun:
    """q**e as a rational function; denominator q**(-e) for negative e."""
    if e >= 0:
        return RatFun._coprime(Poly.qpow(e), ONE)
    return RatFun._coprime(ONE, Poly.qpow(-e))
