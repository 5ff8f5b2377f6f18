"""Classical (q = 1) companions: central binomial sums, harmonic sums,
Bernoulli numbers, and p-adic congruence testing for exact rationals.

These are computed with integer arithmetic only, independently of the
q-modules, so they can serve as oracles for the q -> 1 bridge tests.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from .errors import DenominatorDivisible, InvalidParams
from .primes import is_prime
from .scalars import Rat, padic_valuation


def classical_congruent(x, y, p: int, r: int = 1) -> bool:
    """True iff the p-adic valuation of x - y is at least r.

    Both denominators must be coprime to p, mirroring the convention for
    rational congruences.
    """
    x, y = Rat(x), Rat(y)
    if x.denominator % p == 0 or y.denominator % p == 0:
        raise DenominatorDivisible("denominator divisible by %d" % p)
    d = x - y
    if d == 0:
        return True
    return padic_valuation(d, p) >= r


@lru_cache(maxsize=None)
def bernoulli(n: int):
    """Bernoulli number B_n (convention B_1 = -1/2) via the binomial recurrence."""
    if n < 0:
        raise InvalidParams("Bernoulli index must be nonnegative")
    if n == 0:
        return Rat(1)
    if n > 1 and n % 2:
        return Rat(0)
    # sum_{j=0}^{n} C(n+1, j) B_j = 0
    s = Rat(0)
    for j in range(n):
        s += comb(n + 1, j) * bernoulli(j)
    return -s / (n + 1)


def fermat_quotient_two(p: int):
    """(2^(p-1) - 1) / p."""
    return Rat(2 ** (p - 1) - 1, p)


def harmonic_classical(p: int, d: int):
    """H_(p-1)(d) = sum_{k=1}^{p-1} 1/k^d as an exact rational."""
    if d < 1:
        raise InvalidParams("d must be positive")
    return sum(Rat(1, k**d) for k in range(1, p))


def harmonic_congruence_holds(p: int, d: int) -> bool:
    """H_(p-1)(d) == 0 mod p^2 for odd d, mod p for even d (needs p > d+2)."""
    if not is_prime(p) or p <= d + 2:
        raise InvalidParams("requires a prime p > d + 2, got p=%d d=%d" % (p, d))
    return classical_congruent(harmonic_classical(p, d), 0, p, 2 if d % 2 else 1)


def central_binomial_sums(p: int) -> dict:
    """The central binomial sums entering the q = 1 congruences, exactly."""
    half = Rat(1, 2)
    s_half = Rat(0)  # sum (1/2)^k / k * C(2k,k)
    s_inv = Rat(0)  # sum (-1/2)^k / k / C(2k,k)
    s_plain = Rat(0)  # sum C(2k,k) / k
    s_alt2 = Rat(0)  # sum (-1)^k / k^2 * C(2k,k)
    h2 = Rat(0)  # sum 1 / k^2
    for k in range(1, p):
        c = comb(2 * k, k)
        s_half += half**k / k * c
        s_inv += (-half) ** k / (k * c)
        s_plain += Rat(c, k)
        s_alt2 += Rat((-1) ** k * c, k * k)
        h2 += Rat(1, k * k)
    return {
        "half": s_half,
        "inv": s_inv,
        "plain": s_plain,
        "alt2": s_alt2,
        "h2": h2,
    }


def verify_pc(p: int, which: int) -> bool:
    """The three central-binomial congruences at q = 1 (primes p > 5).

    1: sum (1/2)^k/k C(2k,k) == -3/2 sum (-1/2)^k/k C(2k,k)^(-1) == (2^(p-1)-1)/p  (mod p)
    2: sum 1/k C(2k,k) == 0                                                        (mod p^2)
    3: 5/2 sum (-1)^k/k^2 C(2k,k) == -sum 1/k^2                                    (mod p^3)
    """
    if p <= 5 or not is_prime(p):
        raise InvalidParams("requires a prime p > 5, got %d" % p)
    s = central_binomial_sums(p)
    if which == 1:
        qp = fermat_quotient_two(p)
        mid = Rat(-3, 2) * s["inv"]
        return classical_congruent(s["half"], mid, p, 1) and classical_congruent(mid, qp, p, 1)
    if which == 2:
        return classical_congruent(s["plain"], 0, p, 2)
    if which == 3:
        return classical_congruent(Rat(5, 2) * s["alt2"], -s["h2"], p, 3)
    raise InvalidParams("which must be 1, 2 or 3")


def verify_p5(p: int) -> bool:
    """sum 1/k C(2k,k) == -8/3 H_(p-1)(1) + 2 p^4 B_(p-5)  (mod p^5), p >= 7."""
    if p < 7 or not is_prime(p):
        raise InvalidParams("requires a prime p >= 7, got %d" % p)
    lhs = sum(Rat(comb(2 * k, k), k) for k in range(1, p))
    rhs = Rat(-8, 3) * harmonic_classical(p, 1) + 2 * p**4 * bernoulli(p - 5)
    return classical_congruent(lhs, rhs, p, 5)
