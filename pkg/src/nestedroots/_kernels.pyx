# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the arithmetic kernels in ``_kernels_py``.

Coefficients stay Python integers (they are unbounded), so the gain comes
from typed loops and fewer temporary tuples.  Results match the pure
versions exactly.
"""


cdef tuple _reduce(list prod, red, Py_ssize_t d):
    cdef Py_ssize_t i, k
    cdef list out = prod[:d]
    for k in range(len(red)):
        top = prod[d + k]
        if top:
            row = red[k]
            for i in range(d):
                out[i] += top * row[i]
    return tuple(out)


cdef inline void _accumulate(list prod, a, b, Py_ssize_t d):
    cdef Py_ssize_t i, j
    for i in range(d):
        x = a[i]
        if x:
            for j in range(d):
                prod[i + j] += x * b[j]


def mulmod(a, b, red):
    cdef Py_ssize_t d = len(a)
    if d == 1:
        return (a[0] * b[0],)
    cdef list prod = [0] * (2 * d - 1)
    _accumulate(prod, a, b, d)
    return _reduce(prod, red, d)


def dot(u, v, red):
    cdef Py_ssize_t d = len(u[0])
    cdef Py_ssize_t k, n = len(u)
    cdef list prod = [0] * (2 * d - 1)
    for k in range(n):
        _accumulate(prod, u[k], v[k], d)
    if d == 1:
        return (prod[0],)
    return _reduce(prod, red, d)


def matvec(M, v, red):
    return tuple([dot(row, v, red) for row in M])


cdef tuple _sub(a, b):
    return tuple([x - y for x, y in zip(a, b)])


def cross3(u, v, red):
    return (
        _sub(mulmod(u[1], v[2], red), mulmod(u[2], v[1], red)),
        _sub(mulmod(u[2], v[0], red), mulmod(u[0], v[2], red)),
        _sub(mulmod(u[0], v[1], red), mulmod(u[1], v[0], red)),
    )


def det3(u, v, w, red):
    return dot(u, cross3(v, w, red), red)


def float_signs(vals, powers):
    cdef double s, t, p, q
    cdef Py_ssize_t i, d
    cdef list out = []
    cdef list bounds = []
    for a in vals:
        s = 0.0
        t = 0.0
        d = min(len(a), len(powers))
        for i in range(d):
            q = a[i] * powers[i]
            s += q
            t += abs(q)
        out.append(s)
        bounds.append(1e-12 * t)
    return out, bounds
