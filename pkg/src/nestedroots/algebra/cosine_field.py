"""Exact arithmetic in the real field Q(c), c = 2cos(pi/L).

Every value -cos(pi/m) with m dividing L lives in this field, so a single
field handles all entries of the geometric representation of a Coxeter
system whose edge labels divide L.

Elements are stored as integer coefficient tuples in the power basis
1, c, ..., c^(d-1) together with a positive common denominator.  Values
built only from the doubled Gram matrix (roots, reflection matrices, wall
intersection points) stay in Z[c], so the hot paths work on bare int
tuples; :class:`ExactScalar` wraps them for the public API.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath

from nestedroots import kernels

__all__ = [
    "CosineField",
    "ExactScalar",
    "RecognitionError",
    "cosine_field",
    "scalar_cos",
    "recognize_cos",
]


class RecognitionError(ValueError):
    """Raised when a value is not of the form cos(k*pi/L)."""


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _minimal_polynomial(L: int) -> tuple[int, ...]:
    """Monic integer minimal polynomial of 2cos(pi/L), low degree first."""
    if L == 2:
        return (0, 1)
    n = 2 * L
    conj = [2 * math.cos(2 * math.pi * k / n) for k in range(1, L) if gcd(k, n) == 1]
    poly = [1.0]
    for r in conj:
        new = [0.0] * (len(poly) + 1)
        for i, a in enumerate(poly):
            new[i + 1] += a
            new[i] -= a * r
        poly = new
    coeffs = tuple(int(round(a)) for a in poly)
    # coefficients are small integers; rounding error stays far below 1/2
    assert max(abs(a - b) for a, b in zip(poly, coeffs)) < 1e-6
    return coeffs


class CosineField:
    """The field Q(2cos(pi/L)) with exact arithmetic on coefficient tuples."""

    def __init__(self, L: int):
        if L < 2:
            raise ValueError("L must be at least 2")
        self.L = L
        self.minpoly = _minimal_polynomial(L)
        self.degree = d = len(self.minpoly) - 1
        # rows expressing c^d, ..., c^(2d-2) in the power basis
        red = []
        cur = [-a for a in self.minpoly[:d]]
        for _ in range(max(d - 1, 0)):
            red.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            for i in range(d):
                cur[i] -= top * self.minpoly[i]
        self.reduction = tuple(red)
        self.c_float = 2 * math.cos(math.pi / L)
        self.powers = tuple(self.c_float**i for i in range(d))
        self.zero = (0,) * d
        self.one = (1,) + (0,) * (d - 1)
        self._double_cos = self._build_double_cos()
        self._recognize = {v: k for k, v in enumerate(self._double_cos)}

    def __repr__(self) -> str:
        return f"CosineField(L={self.L})"

    def __reduce__(self):
        return (cosine_field, (self.L,))

    # -- raw Z[c] tuple arithmetic ------------------------------------------

    def from_int(self, n: int) -> tuple[int, ...]:
        return (n,) + (0,) * (self.degree - 1)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def scale(self, a, n: int):
        return tuple(n * x for x in a)

    def mul(self, a, b):
        return kernels.mulmod(a, b, self.reduction)

    def dot(self, u, v):
        """Sum of u[i]*v[i] for two equal-length sequences of raw elements."""
        return kernels.dot(u, v, self.reduction)

    def is_zero(self, a) -> bool:
        return not any(a)

    def to_float(self, a) -> float:
        return math.fsum(x * p for x, p in zip(a, self.powers))

    def sign(self, a) -> int:
        """Exact sign of a raw element.

        Exact zero is detected from the coefficients; otherwise the value is
        evaluated in double precision with a conservative error bound, and
        only if that bound straddles zero do we fall back to interval
        arithmetic at doubling precision.
        """
        if not any(a):
            return 0
        terms = [x * p for x, p in zip(a, self.powers)]
        value = math.fsum(terms)
        bound = 1e-12 * math.fsum(abs(t) for t in terms)
        if value > bound:
            return 1
        if value < -bound:
            return -1
        return self._interval_sign(a)

    def _interval_sign(self, a) -> int:
        iv = mpmath.iv
        saved = iv.prec
        prec = 128
        try:
            while True:
                iv.prec = prec
                c = 2 * iv.cos(iv.pi / self.L)
                acc = iv.mpf(0)
                power = iv.mpf(1)
                for x in a:
                    acc += iv.mpf(x) * power
                    power *= c
                if acc.a > 0:
                    return 1
                if acc.b < 0:
                    return -1
                prec *= 2
                if prec > 1 << 16:  # pragma: no cover - a nonzero value always separates
                    raise ArithmeticError("sign determination did not converge")
        finally:
            iv.prec = saved

    # -- cosines -------------------------------------------------------------

    def _build_double_cos(self):
        """2cos(k*pi/L) for k = 0..2L via the recurrence V_{k+1} = c V_k - V_{k-1}."""
        c = (0, 1) + (0,) * (self.degree - 2) if self.degree > 1 else None
        if c is None:
            # degree-one field: c itself is an integer (0 for L=2, 1 for L=3)
            c = (self.minpoly[0] * -1,)
        vals = [self.from_int(2), c]
        for _ in range(2, 2 * self.L + 1):
            vals.append(self.sub(self.mul(c, vals[-1]), vals[-2]))
        return tuple(vals)

    def double_cos(self, k: int, m: int | None = None):
        """Raw element 2cos(k*pi/m); m defaults to L and must divide L."""
        if m is None:
            m = self.L
        if self.L % m:
            raise ValueError(f"{m} does not divide L={self.L}")
        j = (k * (self.L // m)) % (2 * self.L)
        return self._double_cos[j]

    def recognize_double_cos(self, a) -> int:
        """Return k in [0, L] with a == 2cos(k*pi/L), else raise."""
        try:
            return self._recognize[tuple(a)]
        except KeyError:
            raise RecognitionError(f"{a} is not 2cos(k*pi/{self.L})") from None

    # -- field inverse (rarely needed; not on any hot path) -------------------

    def inverse(self, num, den: int = 1):
        """Inverse of num/den, returned as (num', den').

        Solves a*x = 1 as a linear system over Q using the matrix of
        multiplication by a in the power basis.
        """
        if not any(num):
            raise ZeroDivisionError("inverse of zero")
        d = self.degree
        cols = []
        for i in range(d):
            e = [0] * d
            e[i] = 1
            cols.append(self.mul(num, tuple(e)))
        # augmented matrix rows: M[r][i] = cols[i][r]
        rows = [[Fraction(cols[i][r]) for i in range(d)] + [Fraction(den if r == 0 else 0)] for r in range(d)]
        for col in range(d):
            piv = next(r for r in range(col, d) if rows[r][col] != 0)
            rows[col], rows[piv] = rows[piv], rows[col]
            p = rows[col][col]
            rows[col] = [x / p for x in rows[col]]
            for r in range(d):
                if r != col and rows[r][col] != 0:
                    f = rows[r][col]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
        sol = [rows[r][d] for r in range(d)]
        common = 1
        for x in sol:
            common = _lcm(common, x.denominator)
        return tuple(int(x * common) for x in sol), common


@lru_cache(maxsize=None)
def cosine_field(L: int) -> CosineField:
    """Shared field instance for a given L."""
    return CosineField(L)


class ExactScalar:
    """An element num/den of Q(2cos(pi/L)); immutable and hashable."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: CosineField, num, den: int = 1):
        num = tuple(int(x) for x in num)
        if len(num) != field.degree:
            raise ValueError("coefficient tuple has wrong length")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = tuple(-x for x in num), -den
        g = den
        for x in num:
            g = gcd(g, x)
        if g > 1:
            num, den = tuple(x // g for x in num), den // g
        if not any(num):
            den = 1
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, key, value):
        raise AttributeError("ExactScalar is immutable")

    @classmethod
    def from_rational(cls, field: CosineField, q) -> "ExactScalar":
        q = Fraction(q)
        return cls(field, field.from_int(q.numerator), q.denominator)

    @classmethod
    def generator(cls, field: CosineField) -> "ExactScalar":
        """The element c = 2cos(pi/L) itself."""
        if field.degree == 1:
            return cls(field, field._double_cos[1])
        return cls(field, (0, 1) + (0,) * (field.degree - 2))

    def _coerce(self, other):
        if isinstance(other, ExactScalar):
            if other.field is not self.field:
                raise TypeError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return ExactScalar.from_rational(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        num = f.add(f.scale(self.num, other.den), f.scale(other.num, self.den))
        return ExactScalar(f, num, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(self.field, self.field.neg(self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ExactScalar(self.field, self.field.mul(self.num, other.num), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "ExactScalar":
        num, den = self.field.inverse(self.num, self.den)
        return ExactScalar(self.field, num, den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = ExactScalar.from_rational(self.field, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactScalar.from_rational(self.field, other)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return self.field.L == other.field.L and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.field.L, self.num, self.den))

    def sign(self) -> int:
        return self.field.sign(self.num)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self):
        return any(self.num)

    def __float__(self):
        return self.field.to_float(self.num) / self.den

    def evaluate(self, dps: int = 50) -> mpmath.mpf:
        """High-precision numeric value, for consistency checks only."""
        with mpmath.workdps(dps):
            c = 2 * mpmath.cos(mpmath.pi / self.field.L)
            return mpmath.fsum(x * c**i for i, x in enumerate(self.num)) / self.den

    def __repr__(self):
        terms = []
        for i, x in enumerate(self.num):
            if x:
                terms.append(f"{x}" if i == 0 else f"{x}*c^{i}" if i > 1 else f"{x}*c")
        body = " + ".join(terms) or "0"
        return f"({body})/{self.den}" if self.den != 1 else body


def scalar_cos(field: CosineField, m: int, k: int = 1) -> ExactScalar:
    """cos(k*pi/m) as an exact element; m must divide the field's L."""
    return ExactScalar(field, field.double_cos(k, m), 2)


def recognize_cos(value: ExactScalar) -> Fraction:
    """Return the reduced fraction k/L in [0, 1] with value == cos(k*pi/L)."""
    field = value.field
    # value = num/den must equal (2cos)/2
    doubled = ExactScalar(field, field.scale(value.num, 2), value.den)
    if doubled.den != 1:
        raise RecognitionError(f"{value!r} is not a cosine of a multiple of pi/{field.L}")
    k = field.recognize_double_cos(doubled.num)
    if k > field.L:
        k = 2 * field.L - k
    return Fraction(k, field.L)
