"""Pure-Python implementations of the arithmetic kernels.

These are the reference versions; the compiled module in ``_kernels.pyx``
must agree with them bit for bit.  Elements of Z[c] are int tuples in the
power basis and ``red`` holds the rows expressing c^d, ..., c^(2d-2).
"""


def _reduce(prod, red, d):
    out = prod[:d]
    for k, row in enumerate(red):
        top = prod[d + k]
        if top:
            for i in range(d):
                out[i] += top * row[i]
    return tuple(out)


def mulmod(a, b, red):
    d = len(a)
    if d == 1:
        return (a[0] * b[0],)
    prod = [0] * (2 * d - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return _reduce(prod, red, d)


def dot(u, v, red):
    """Sum of u[i]*v[i] in Z[c], reducing once at the end."""
    d = len(u[0])
    prod = [0] * (2 * d - 1)
    for a, b in zip(u, v):
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
    if d == 1:
        return (prod[0],)
    return _reduce(prod, red, d)


def matvec(M, v, red):
    """Matrix (rows of elements) times vector of elements."""
    return tuple(dot(row, v, red) for row in M)


def cross3(u, v, red):
    """Cross product of two 3-vectors of Z[c] elements."""
    return (
        _sub(mulmod(u[1], v[2], red), mulmod(u[2], v[1], red)),
        _sub(mulmod(u[2], v[0], red), mulmod(u[0], v[2], red)),
        _sub(mulmod(u[0], v[1], red), mulmod(u[1], v[0], red)),
    )


def det3(u, v, w, red):
    return dot(u, cross3(v, w, red), red)


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def float_signs(vals, powers):
    """Float evaluation of many Z[c] elements; returns (values, error bounds)."""
    out = []
    bounds = []
    for a in vals:
        s = 0.0
        t = 0.0
        for x, p in zip(a, powers):
            s += x * p
            t += abs(x * p)
        out.append(s)
        bounds.append(1e-12 * t)
    return out, bounds
