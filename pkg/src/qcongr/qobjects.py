"""Constructors for the basic q-objects.

q-integers, q-Pochhammer symbols, Gaussian q-binomials, signed powers of q,
Legendre symbols and the q-analog of the Fermat quotient.
"""

from __future__ import annotations

import threading
from typing import Dict, Tuple

from .errors import InvalidModulus, InvalidParams, NonExactDivision
from .poly import ONE, Poly, ZERO, poly_divrem
from .primes import is_prime
from .ratfun import RatFun, q_power  # noqa: F401  (q_power re-exported here)
from .scalars import Rat


def q_int(n: int) -> Poly:
    """[n]_q = 1 + q + ... + q^(n-1); the zero polynomial for n = 0."""
    if n < 0:
        raise InvalidParams("q_int needs n >= 0, got %d" % n)
    return Poly._raw([Rat(1)] * n)


def q_pochhammer(sign: int, offset: int, n: int) -> Poly:
    """prod_{j=0}^{n-1} (1 - sign * q^(offset+j)); the empty product is 1.

    sign=+1, offset=1 gives (q; q)_n and sign=-1, offset=1 gives (-q; q)_n.
    """
    if sign not in (1, -1):
        raise InvalidParams("sign must be +1 or -1")
    if n < 0 or offset < 0:
        raise InvalidParams("offset and n must be nonnegative")
    out = ONE
    for j in range(n):
        out = out * Poly.from_pairs([(0, 1), (offset + j, -sign)])
    return out


# Gaussian binomials come from a Pascal-recurrence memo table for the sizes
# that occur inside sums over k; isolated large arguments (e.g. n = a*p - 1
# with a = 3, p = 31) use the product formula instead, which costs O(k) exact
# single-factor divisions rather than a full triangle of the memo table.
_PASCAL_LIMIT = 64

_qbin_cache: Dict[Tuple[int, int], Poly] = {}
_qbin_lock = threading.Lock()


def q_binomial(n: int, k: int) -> Poly:
    """Gaussian binomial [n choose k]_q as a polynomial; 0 unless 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return ZERO
    k = min(k, n - k)
    if k == 0:
        return ONE
    key = (n, k)
    got = _qbin_cache.get(key)
    if got is not None:
        return got
    if n <= _PASCAL_LIMIT:
        val = q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)
    else:
        val = ONE
        for j in range(1, k + 1):
            num = val * Poly.from_pairs([(0, 1), (n - k + j, -1)])
            quot, rem = poly_divrem(num, Poly.from_pairs([(0, 1), (j, -1)]))
            if not rem.is_zero():
                raise NonExactDivision("q-binomial product formula not exact")
            val = quot
    with _qbin_lock:
        _qbin_cache.setdefault(key, val)
    return val


def legendre(p: int, m: int) -> int:
    """Quadratic-residue symbol (p | m) for an odd prime m, by Euler's criterion."""
    if m < 3 or m % 2 == 0 or not is_prime(m):
        raise InvalidModulus("modulus %d is not an odd prime" % m)
    if p % m == 0:
        return 0
    e = pow(p, (m - 1) // 2, m)
    return 1 if e == 1 else -1


def q_fermat_quotient(p: int) -> Poly:
    """((-q; q)_(p-1) - 1) / [p]_q for an odd prime p; the division is exact."""
    if p < 3 or not is_prime(p):
        raise InvalidParams("p must be an odd prime, got %d" % p)
    num = q_pochhammer(-1, 1, p - 1) - ONE
    quot, rem = poly_divrem(num, q_int(p))
    if not rem.is_zero():
        raise NonExactDivision("q-Fermat quotient division left remainder %s" % rem)
    return quot
