"""Dense univariate polynomials in q with exact rational coefficients.

Canonical form: the coefficient list is trimmed (leading coefficient
nonzero); the zero polynomial has an empty list and degree -1 (sentinel).
Instances are immutable by convention and safe to share.
"""

from __future__ import annotations

import math
from typing import Iterable, List, Tuple

from .backend import kernel
from .errors import BothZero, DivisionByZeroPoly, NonExactDivision
from .scalars import Rat, rat_str


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [x if isinstance(x, Rat) else Rat(x) for x in coeffs]
        self.coeffs = kernel.trim(c)

    @staticmethod
    def _raw(coeffs: list) -> "Poly":
        """Wrap an already-trimmed list of Rat without copying."""
        p = Poly.__new__(Poly)
        p.coeffs = coeffs
        return p

    @staticmethod
    def from_pairs(pairs: Iterable[Tuple[int, object]]) -> "Poly":
        """Sparse constructor from (exponent, coefficient) pairs."""
        pairs = list(pairs)
        if not pairs:
            return ZERO
        n = max(e for e, _ in pairs) + 1
        c = [Rat(0)] * n
        for e, v in pairs:
            c[e] = c[e] + Rat(v)
        return Poly._raw(kernel.trim(c))

    @staticmethod
    def const(v) -> "Poly":
        v = Rat(v)
        return Poly._raw([v] if v else [])

    @staticmethod
    def qpow(e: int) -> "Poly":
        """q**e for e >= 0."""
        if e < 0:
            raise ValueError("qpow needs e >= 0; use RatFun for negative powers")
        return Poly._raw([Rat(0)] * e + [Rat(1)])

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Highest exponent; -1 stands in for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 1

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else Rat(0)

    def coeff(self, e: int):
        if 0 <= e < len(self.coeffs):
            return self.coeffs[e]
        return Rat(0)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def trailing_order(self) -> int:
        """Multiplicity of the factor q (index of first nonzero coefficient)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rat)):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        return Poly._raw(kernel.add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return Poly._raw(kernel.sub(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return Poly._raw(kernel.neg(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Rat)):
            return Poly._raw(kernel.scale(self.coeffs, Rat(other)))
        other = _coerce(other)
        return Poly._raw(kernel.mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a Poly; use RatFun")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def scale(self, c) -> "Poly":
        return Poly._raw(kernel.scale(self.coeffs, Rat(c)))

    def shift(self, m: int) -> "Poly":
        """Multiply by q**m (m >= 0)."""
        if not self.coeffs:
            return ZERO
        return Poly._raw([Rat(0)] * m + self.coeffs)

    def monic(self) -> "Poly":
        if not self.coeffs:
            return ZERO
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return Poly._raw(kernel.scale(self.coeffs, 1 / lead))

    def eval(self, x):
        """Value at a rational point."""
        return kernel.eval_at(self.coeffs, Rat(x))

    def subs_qpow(self, n: int) -> "Poly":
        """Substitute q -> q**n (n >= 1)."""
        if n < 1:
            raise ValueError("substitution power must be >= 1")
        if not self.coeffs:
            return ZERO
        out = [Rat(0)] * ((len(self.coeffs) - 1) * n + 1)
        for e, c in enumerate(self.coeffs):
            out[e * n] = c
        return Poly._raw(kernel.trim(out))

    # -- presentation ------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                parts.append(rat_str(c))
                continue
            var = "q" if e == 1 else "q^%d" % e
            if c == 1:
                parts.append(var)
            elif c == -1:
                parts.append("-" + var)
            else:
                parts.append("%s*%s" % (rat_str(c), var))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return "Poly(%s)" % self


def _coerce(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Rat)):
        return Poly.const(x)
    raise TypeError("cannot coerce %r to Poly" % (x,))


ZERO = Poly._raw([])
ONE = Poly._raw([Rat(1)])
Q = Poly._raw([Rat(0), Rat(1)])


def poly_divrem(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    """Exact Euclidean division over the rationals; deg(rem) < deg(b)."""
    if b.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    q, r = kernel.divrem(a.coeffs, b.coeffs)
    return Poly._raw(q), Poly._raw(r)


def poly_exact_div(a: Poly, b: Poly) -> Poly:
    """Division known to be exact; raises NonExactDivision otherwise."""
    q, r = poly_divrem(a, b)
    if not r.is_zero():
        raise NonExactDivision("remainder %s is nonzero" % r)
    return q


def divides(b: Poly, a: Poly) -> bool:
    """True iff b divides a exactly (b nonzero)."""
    _, r = poly_divrem(a, b)
    return r.is_zero()


def _to_primitive_int(p: Poly) -> List[int]:
    """Scale a nonzero Poly to a primitive integer coefficient list."""
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, int(c.denominator))
    ints = [int(c.numerator) * (den // int(c.denominator)) for c in p.coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
        if g == 1:
            break
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _int_trim(c: List[int]) -> List[int]:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    del c[n:]
    return c


def _int_primitive(c: List[int]) -> List[int]:
    g = 0
    for v in c:
        g = math.gcd(g, v)
        if g == 1:
            return c
    if g > 1:
        c = [v // g for v in c]
    return c


def _int_prem(a: List[int], b: List[int]) -> List[int]:
    """Pseudo-remainder of integer coefficient lists (b nonzero)."""
    db = len(b) - 1
    lead = b[-1]
    rem = list(a)
    while len(rem) - 1 >= db:
        da = len(rem) - 1
        c = rem[-1]
        rem = [lead * x for x in rem]
        sh = da - db
        for j in range(db + 1):
            rem[sh + j] -= c * b[j]
        _int_trim(rem)
        if not rem:
            break
    return rem


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor over the rationals.

    Runs a primitive PRS on integer-scaled inputs to keep coefficient
    growth in check; the result is normalized to be monic.
    """
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    x = _to_primitive_int(a)
    y = _to_primitive_int(b)
    if len(x) < len(y):
        x, y = y, x
    while y:
        if len(y) == 1:
            return ONE
        r = _int_primitive(_int_prem(x, y))
        x, y = y, r
    return Poly(x).monic()


def poly_content(p: Poly):
    """Rational content: p = content * primitive integer polynomial."""
    if p.is_zero():
        return Rat(0)
    den = 1
    num = 0
    for c in p.coeffs:
        den = den * int(c.denominator) // math.gcd(den, int(c.denominator))
        num = math.gcd(num, int(c.numerator))
    return Rat(num, den)


def str_ratfun(num: Poly, den: Poly) -> str:
    if den.is_one():
        return str(num)
    return "(%s)/(%s)" % (num, den)
