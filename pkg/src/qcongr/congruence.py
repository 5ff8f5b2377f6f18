"""Congruences of rational functions modulo powers of [p]_q.

For a prime p, [p]_q is the p-th cyclotomic polynomial; f and g are
congruent modulo [p]_q**r when the numerator of f - g is divisible by
[p]_q**r and the denominator is coprime to [p]_q.  The relation is
undefined (an error, not False) when the denominator condition fails.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Union

from .errors import DenominatorNotCoprime, InvalidModulus, NotInvertible
from .factored import FTerm, cyclotomic, fsum
from .poly import ONE, Poly, Q, ZERO, poly_divrem
from .primes import is_prime
from .qobjects import q_int
from .ratfun import RatFun


@dataclass(frozen=True, init=False)
class Modulus:
    """[p]_q**r for an odd prime p and r >= 1."""

    p: int
    r: int
    poly: Poly = field(compare=False)

    def __init__(self, p: int, r: int = 1):
        if p < 3 or not is_prime(p):
            raise InvalidModulus("p must be an odd prime, got %d" % p)
        if r < 1:
            raise InvalidModulus("r must be >= 1, got %d" % r)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "poly", q_int(p) ** r)

    @property
    def phi(self) -> Poly:
        return q_int(self.p)

    def __str__(self):
        return "[%d]_q^%d" % (self.p, self.r)


@dataclass
class CongruenceResult:
    """holds iff the reduced representative of the difference is zero."""

    holds: bool
    witness: Poly

    def __bool__(self):
        return self.holds


def _phi_divides(m: Modulus, den: Poly) -> bool:
    _, rem = poly_divrem(den, m.phi)
    return rem.is_zero()


def reduce_poly(a: Poly, m: Modulus) -> Poly:
    _, rem = poly_divrem(a, m.poly)
    return rem


def poly_modinv(d: Poly, m: Modulus) -> Poly:
    """u with d*u == 1 (mod [p]_q**r), deg(u) < r*(p-1), by extended Euclid."""
    r0, r1 = m.poly, reduce_poly(d, m)
    s0, s1 = ZERO, ONE
    while not r1.is_zero():
        quot, rem = poly_divrem(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quot * s1
    if r0.degree != 0:
        raise NotInvertible("gcd with modulus has degree %d" % r0.degree)
    return reduce_poly(s0.scale(1 / r0.constant_term()), m)


def poly_powmod(base: Poly, e: int, m: Modulus) -> Poly:
    """base**e mod [p]_q**r by binary exponentiation; e < 0 inverts first."""
    if e < 0:
        base = poly_modinv(base, m)
        e = -e
    result = ONE
    base = reduce_poly(base, m)
    while e:
        if e & 1:
            result = reduce_poly(result * base, m)
        e >>= 1
        if e:
            base = reduce_poly(base * base, m)
    return result


def reduce_mod(f: Union[RatFun, Poly], m: Modulus) -> Poly:
    """Canonical representative num * den^(-1) of degree < r*(p-1)."""
    if isinstance(f, Poly):
        return reduce_poly(f, m)
    if f.is_poly():
        return reduce_poly(f.num, m)
    if _phi_divides(m, f.den):
        raise NotInvertible("denominator shares the factor [%d]_q" % m.p)
    return reduce_poly(f.num * poly_modinv(f.den, m), m)


def congruent(f: Union[RatFun, Poly], g: Union[RatFun, Poly], m: Modulus) -> CongruenceResult:
    """Test f == g (mod [p]_q**r) per the rational-function congruence."""
    if isinstance(f, Poly):
        f = RatFun.from_poly(f)
    if isinstance(g, Poly):
        g = RatFun.from_poly(g)
    diff = f - g
    if diff.is_zero():
        return CongruenceResult(True, ZERO)
    if _phi_divides(m, diff.den):
        raise DenominatorNotCoprime(
            "difference has denominator divisible by [%d]_q; congruence undefined" % m.p
        )
    _, rem = poly_divrem(diff.num, m.poly)
    if rem.is_zero():
        return CongruenceResult(True, ZERO)
    return CongruenceResult(False, reduce_mod(diff, m))


class ModRing:
    """Working context for the quotient ring Q[q] / ([p]_q**r).

    Caches reduced q-integers, their inverses, and powers of q so that
    term-by-term reduction of long sums stays cheap.
    """

    def __init__(self, m: Modulus):
        self.m = m
        self._inv: Dict[Poly, Poly] = {}
        self._qint: Dict[int, Poly] = {}
        self._qpow: Dict[int, Poly] = {}
        self._pow: Dict[tuple, Poly] = {}
        self._cyc: Dict[tuple, Poly] = {}
        self.memo: Dict[tuple, Poly] = {}  # scratch cache for client code

    def reduce(self, a: Poly) -> Poly:
        return reduce_poly(a, self.m)

    def mul(self, a: Poly, b: Poly) -> Poly:
        return reduce_poly(a * b, self.m)

    def inv(self, a: Poly) -> Poly:
        u = self._inv.get(a)
        if u is None:
            u = poly_modinv(a, self.m)
            self._inv[a] = u
        return u

    def qint(self, k: int) -> Poly:
        v = self._qint.get(k)
        if v is None:
            v = reduce_poly(q_int(k), self.m)
            self._qint[k] = v
        return v

    def qpow(self, e: int) -> Poly:
        v = self._qpow.get(e)
        if v is None:
            v = poly_powmod(Q, e, self.m)
            self._qpow[e] = v
        return v

    def qint_pow(self, j: int, e: int) -> Poly:
        """Cached reduced [j]_q**e; e < 0 uses the cached modular inverse."""
        key = (j, e)
        v = self._pow.get(key)
        if v is None:
            base = self.qint(j) if e >= 0 else self.inv(self.qint(j))
            v = self.pow(base, abs(e))
            self._pow[key] = v
        return v

    def pow(self, a: Poly, e: int) -> Poly:
        key = (a, e)
        v = self._pow.get(key)
        if v is None:
            v = poly_powmod(a, e, self.m)
            self._pow[key] = v
        return v

    def _cyc_pow(self, d: int, e: int) -> Poly:
        """Reduced Phi_d**e, inverting first when e < 0 (cached)."""
        key = (d, e)
        v = self._cyc.get(key)
        if v is None:
            base = self.reduce(cyclotomic(d))
            if e < 0:
                base = self.inv(base)
            v = self.pow(base, abs(e))
            self._cyc[key] = v
        return v

    def fterm(self, t: FTerm) -> Poly:
        """Reduced representative of a factored term (all factors units)."""
        out = self.reduce(t.poly.scale(t.coef))
        if t.qexp:
            out = self.mul(out, self.qpow(t.qexp))
        for d, e in t.fac.items():
            out = self.mul(out, self._cyc_pow(d, e))
        return out


def terms_unit_denominator(terms: Iterable[FTerm], p: int) -> bool:
    """True when no term denominator carries the factor [p]_q."""
    return all(t.fac.get(p, 0) >= 0 for t in terms)


def reduce_sum_mod(terms: List[FTerm], ring: ModRing) -> Poly:
    """Reduced representative of an exact sum of factored terms.

    Fast path: when every term denominator is a unit modulo [p]_q the terms
    are reduced individually in the quotient ring.  Otherwise the sum is
    accumulated exactly (only the total is congruence-testable) and the
    reduced total must have a unit denominator, or NotInvertible is raised.
    """
    if terms_unit_denominator(terms, ring.m.p):
        out = ZERO
        for t in terms:
            out = out + ring.fterm(t)
        return ring.reduce(out)
    total = fsum(terms)
    if _phi_divides(ring.m, total.den):
        raise DenominatorNotCoprime(
            "accumulated sum keeps a denominator factor [%d]_q" % ring.m.p
        )
    return reduce_mod(total, ring.m)
