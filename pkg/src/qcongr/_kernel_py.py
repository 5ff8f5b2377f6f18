"""Pure-Python dense polynomial kernels.

Coefficient vectors are plain lists, index = exponent, trimmed so that the
last entry is nonzero; the zero polynomial is the empty list.  Coefficients
are exact rationals (gmpy2.mpq or Fraction); the kernels never coerce types.

A compiled Cython twin (_kernel) with identical semantics is preferred at
import time, see qcongr.backend.
"""

IMPLEMENTATION = "python"


def trim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    del c[n:]
    return c


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return trim(out)


def sub(a, b):
    n = max(len(a), len(b))
    out = [None] * n
    la, lb = len(a), len(b)
    for i in range(n):
        x = a[i] if i < la else 0
        y = b[i] if i < lb else 0
        out[i] = x - y
    return trim(out)


def neg(a):
    return [-x for x in a]


def scale(a, c):
    if not c:
        return []
    return [x * c for x in a]


def mul(a, b):
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, cb in enumerate(b):
        if not cb:
            continue
        for i, ca in enumerate(a):
            if ca:
                out[i + j] = out[i + j] + ca * cb
    return trim(out)


def divrem(a, b):
    """Euclidean division: a = b*q + r with deg r < deg b.  b must be nonzero."""
    db = len(b) - 1
    lead = b[db]
    rem = list(a)
    if len(rem) - 1 < db:
        return [], trim(rem)
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if not c:
            continue
        c = c / lead
        quot[i - db] = c
        for j in range(db):
            rem[i - db + j] = rem[i - db + j] - c * b[j]
        rem[i] = 0
    return trim(quot), trim(rem)


def eval_at(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc
