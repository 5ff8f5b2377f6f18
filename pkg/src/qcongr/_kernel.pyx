# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled dense polynomial kernels.

Same contracts as qcongr._kernel_py; coefficients stay generic Python
objects (exact rationals), the speedup comes from typed index loops and
avoiding interpreter dispatch in the inner convolution/division loops.
"""

IMPLEMENTATION = "compiled"


cpdef list trim(list c):
    cdef Py_ssize_t n = len(c)
    while n and not c[n - 1]:
        n -= 1
    del c[n:]
    return c


cpdef list add(list a, list b):
    cdef Py_ssize_t i, lb
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    lb = len(b)
    for i in range(lb):
        out[i] = out[i] + b[i]
    return trim(out)


cpdef list sub(list a, list b):
    cdef Py_ssize_t i, la = len(a), lb = len(b)
    cdef Py_ssize_t n = la if la > lb else lb
    cdef list out = [None] * n
    cdef object x, y
    for i in range(n):
        x = a[i] if i < la else 0
        y = b[i] if i < lb else 0
        out[i] = x - y
    return trim(out)


cpdef list neg(list a):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [None] * n
    for i in range(n):
        out[i] = -a[i]
    return out


cpdef list scale(list a, object c):
    cdef Py_ssize_t i, n = len(a)
    if not c:
        return []
    cdef list out = [None] * n
    for i in range(n):
        out[i] = a[i] * c
    return out


cpdef list mul(list a, list b):
    cdef Py_ssize_t i, j, la, lb
    cdef object ca, cb
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    la = len(a)
    lb = len(b)
    cdef list out = [0] * (la + lb - 1)
    for j in range(lb):
        cb = b[j]
        if not cb:
            continue
        for i in range(la):
            ca = a[i]
            if ca:
                out[i + j] = out[i + j] + ca * cb
    return trim(out)


cpdef tuple divrem(list a, list b):
    """Euclidean division: a = b*q + r with deg r < deg b.  b must be nonzero."""
    cdef Py_ssize_t db = len(b) - 1
    cdef Py_ssize_t i, j
    cdef object lead = b[db]
    cdef object c
    cdef list rem = list(a)
    if len(rem) - 1 < db:
        return [], trim(rem)
    cdef list quot = [0] * (len(rem) - db)
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


cpdef object eval_at(list a, object x):
    cdef Py_ssize_t i
    cdef object acc = 0
    for i in range(len(a) - 1, -1, -1):
        acc = acc * x + a[i]
    return acc
