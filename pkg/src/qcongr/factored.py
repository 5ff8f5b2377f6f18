"""Factored q-terms and gcd-free summation.

Every summand appearing in the identities handled by this package has a
denominator built from powers of q and of binomials (1 - q^j), (1 + q^j)
(via q-integers, q-Pochhammer symbols and Gaussian q-binomials).  Over the
rationals all of those split into cyclotomic polynomials, which are
pairwise coprime, so a term can be carried as

    coef * q**qexp * poly * prod_d Phi_d**fac[d]

with integer exponents of either sign.  Summing over a common denominator
and cancelling factor-by-factor (trial exact division) then produces a
canonical RatFun without a single generic polynomial gcd, which is what
makes the exact accumulation of the large inverse-binomial sums feasible.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable

from .backend import kernel
from .poly import ONE, Poly, poly_divrem, poly_exact_div
from .ratfun import RF_ZERO, RatFun
from .scalars import Rat


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    out.sort()
    return tuple(out)


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Poly:
    """The n-th cyclotomic polynomial (monic, integer coefficients)."""
    if n == 1:
        return Poly([-1, 1])
    num = Poly.from_pairs([(0, -1), (n, 1)])  # q^n - 1
    for d in divisors(n)[:-1]:
        num = poly_exact_div(num, cyclotomic(d))
    return num


@lru_cache(maxsize=None)
def cyclotomic_power(n: int, e: int) -> Poly:
    return cyclotomic(n) ** e


@lru_cache(maxsize=None)
def _one_plus_indices(j: int) -> tuple:
    """Cyclotomic indices of 1 + q^j (divisors of 2j that do not divide j)."""
    return tuple(d for d in divisors(2 * j) if j % d != 0)


class FTerm:
    """Mutable builder for one factored summand."""

    __slots__ = ("coef", "qexp", "fac", "poly")

    def __init__(self, coef=1):
        self.coef = Rat(coef)
        self.qexp = 0
        self.fac: Dict[int, int] = {}
        self.poly = ONE

    def copy(self) -> "FTerm":
        t = FTerm.__new__(FTerm)
        t.coef = self.coef
        t.qexp = self.qexp
        t.fac = dict(self.fac)
        t.poly = self.poly
        return t

    def _bump(self, d: int, e: int):
        v = self.fac.get(d, 0) + e
        if v:
            self.fac[d] = v
        else:
            self.fac.pop(d, None)

    # Each times_* multiplies the term in place and returns self.

    def times_coef(self, c) -> "FTerm":
        self.coef = self.coef * Rat(c)
        return self

    def times_qpow(self, e: int) -> "FTerm":
        self.qexp += e
        return self

    def times_one_minus(self, j: int, e: int = 1) -> "FTerm":
        """(1 - q^j)**e, j >= 1."""
        if e % 2:
            self.coef = -self.coef
        for d in divisors(j):
            self._bump(d, e)
        return self

    def times_one_plus(self, j: int, e: int = 1) -> "FTerm":
        """(1 + q^j)**e, j >= 1."""
        for d in _one_plus_indices(j):
            self._bump(d, e)
        return self

    def times_qint(self, j: int, e: int = 1) -> "FTerm":
        """[j]_q ** e = ((1 - q^j)/(1 - q))**e, j >= 1."""
        for d in divisors(j)[1:]:
            self._bump(d, e)
        return self

    def times_poch_qq(self, m: int, e: int = 1) -> "FTerm":
        """(q; q)_m ** e."""
        if (m * e) % 2:
            self.coef = -self.coef
        for d in range(1, m + 1):
            self._bump(d, e * (m // d))
        return self

    def times_poch_minus_q(self, m: int, e: int = 1) -> "FTerm":
        """(-q; q)_m ** e."""
        for j in range(1, m + 1):
            self.times_one_plus(j, e)
        return self

    def times_qbin(self, n: int, k: int, e: int = 1) -> "FTerm":
        """Gaussian binomial [n choose k]_q ** e; requires 0 <= k <= n."""
        if not 0 <= k <= n:
            raise ValueError("q-binomial (%d, %d) is zero, not invertible" % (n, k))
        for d in range(2, n + 1):
            v = n // d - k // d - (n - k) // d
            if v:
                self._bump(d, e * v)
        return self

    def times_poly(self, p: Poly) -> "FTerm":
        self.poly = self.poly * p
        return self

    def eval(self, x):
        """Exact value at a rational point x (no factor may vanish there)."""
        v = self.coef * Rat(x) ** self.qexp * self.poly.eval(x)
        for d, e in self.fac.items():
            v = v * cyclotomic(d).eval(x) ** e
        return v

    def to_ratfun(self) -> RatFun:
        return fsum([self])

    def __repr__(self):
        return "FTerm(%s * q^%d * (%s) * %s)" % (self.coef, self.qexp, self.poly, self.fac)


def fsum(terms: Iterable[FTerm]) -> RatFun:
    """Exact sum of factored terms, returned in canonical reduced form."""
    terms = [t for t in terms if t.coef and not t.poly.is_zero()]
    if not terms:
        return RF_ZERO
    den_q = max(0, -min(t.qexp for t in terms))
    den_fac: Dict[int, int] = {}
    for t in terms:
        for d, e in t.fac.items():
            if -e > den_fac.get(d, 0):
                den_fac[d] = -e
    total: list = []
    for t in terms:
        num = kernel.scale(t.poly.coeffs, t.coef)
        if t.qexp + den_q:
            num = [Rat(0)] * (t.qexp + den_q) + num
        for d, e in t.fac.items():
            up = e + den_fac.get(d, 0)
            if up:
                num = kernel.mul(num, cyclotomic_power(d, up).coeffs)
        for d, e in den_fac.items():
            if e and d not in t.fac:
                num = kernel.mul(num, cyclotomic_power(d, e).coeffs)
        total = kernel.add(total, num)
    num = Poly._raw(total)
    if num.is_zero():
        return RF_ZERO
    # cancel powers of q
    lo = min(num.trailing_order(), den_q)
    if lo:
        num = Poly._raw(num.coeffs[lo:])
        den_q -= lo
    # cancel cyclotomic factors while they still divide exactly
    for d in sorted(den_fac, key=lambda d: -d):
        phi = cyclotomic(d)
        while den_fac[d] > 0:
            quot, rem = poly_divrem(num, phi)
            if not rem.is_zero():
                break
            num = quot
            den_fac[d] -= 1
    den = Poly.qpow(den_q)
    for d, e in den_fac.items():
        if e:
            den = den * cyclotomic_power(d, e)
    return RatFun._coprime(num, den)
