"""Exact rational scalars.

Coefficients throughout the package are arbitrary-precision rationals.
gmpy2.mpq is used when available (noticeably faster on large operands);
fractions.Fraction is the drop-in fallback.
"""

from __future__ import annotations

import math

try:
    from gmpy2 import mpq as Rat  # type: ignore

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Rat  # type: ignore

    HAVE_GMPY2 = False

ZERO = Rat(0)
ONE = Rat(1)


def rat(a, b=None):
    """Build a rational from an int, a pair, a string like '3/4', or a Rat."""
    if b is None:
        return Rat(a)
    return Rat(a, b)


def numer(x) -> int:
    return int(x.numerator)


def denom(x) -> int:
    return int(x.denominator)


def is_integer(x) -> bool:
    return x.denominator == 1


def rat_str(x) -> str:
    """Render as 'a' or 'a/b'."""
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def padic_valuation(x, p: int) -> int:
    """Exponent of the prime p in the rational x; raises on x == 0."""
    if x == 0:
        raise ValueError("valuation of zero is undefined")
    n, d = int(x.numerator), int(x.denominator)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    if v:
        return v
    while d % p == 0:
        d //= p
        v -= 1
    return v


def int_gcd_list(values) -> int:
    g = 0
    for v in values:
        g = math.gcd(g, v)
        if g == 1:
            return 1
    return g
