"""Coefficient structures for the root-group calculus.

Three kinds of carrier are provided:

* :class:`PrimeField` -- integers mod p, used for hexagonal systems.
* :class:`TitsField` -- a finite field of characteristic 2 stored as
  bit-packed polynomials, with an endomorphism ``sigma`` (and optionally an
  involution ``tau``).
* :class:`BiPolynomialRing` -- polynomials in two commuting variables a, b
  over a :class:`TitsField`, where sigma acts on coefficients and sends
  a -> b, b -> a^2.

All values are plain ints (field elements) or frozen dicts (polynomials), so
they are immutable and safe to share.
"""

from __future__ import annotations

import random
from typing import Iterable

__all__ = [
    "PrimeField",
    "TitsField",
    "BiPolynomial",
    "BiPolynomialRing",
    "tits_sigma_check",
    "f2_identity",
    "f8_t4",
    "f4_square",
]


class PrimeField:
    """Z/pZ with elements stored as ints in [0, p)."""

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.cardinality = p
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def elements(self):
        return range(self.p)

    def __call__(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def pow(self, a, n):
        return pow(a, n, self.p)

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def random(self, rng: random.Random):
        return rng.randrange(self.p)


def _gf2_mul(a: int, b: int, modulus: int, n: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> n & 1:
            a ^= modulus
    return out


class TitsField:
    """GF(2^n) as F2[x]/(modulus), elements are ints whose bits are coefficients.

    ``sigma`` and ``tau`` are given as exponents of the Frobenius: sigma(t) =
    t^(2^sigma_exp).  ``tau_exp=None`` means no involution is attached.
    """

    def __init__(self, n: int, modulus: int, sigma_exp: int = 0, tau_exp: int | None = None, name: str | None = None):
        if modulus >> n != 1:
            raise ValueError("modulus must have degree n")
        self.n = n
        self.modulus = modulus
        self.characteristic = 2
        self.cardinality = 1 << n
        self.sigma_exp = sigma_exp % n if n else 0
        self.tau_exp = tau_exp
        self.name = name or f"GF(2^{n})"
        self.zero = 0
        self.one = 1
        size = self.cardinality
        # full multiplication table: the carriers used here have at most 256 elements
        self._mul = [[_gf2_mul(a, b, modulus, n) for b in range(size)] for a in range(size)]
        self._sigma = [self._frob(t, self.sigma_exp) for t in range(size)]
        self._tau = [self._frob(t, tau_exp) for t in range(size)] if tau_exp is not None else None
        if self._tau is not None and any(self._tau[self._tau[t]] != t for t in range(size)):
            raise ValueError("tau must be an involution")

    def __repr__(self):
        return f"TitsField({self.name}, sigma=t^{2**self.sigma_exp})"

    def _frob(self, t: int, k: int) -> int:
        for _ in range(k):
            t = _gf2_mul(t, t, self.modulus, self.n)
        return t

    def elements(self):
        return range(self.cardinality)

    def add(self, a, b):
        return a ^ b

    sub = add

    def neg(self, a):
        return a

    def mul(self, a, b):
        return self._mul[a][b]

    def pow(self, a, e):
        out = 1
        while e:
            if e & 1:
                out = self._mul[out][a]
            a = self._mul[a][a]
            e >>= 1
        return out

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.cardinality - 2)

    def sigma(self, a):
        return self._sigma[a]

    def tau(self, a):
        if self._tau is None:
            return a
        return self._tau[a]

    def random(self, rng: random.Random):
        return rng.randrange(self.cardinality)


def tits_sigma_check(F) -> bool:
    """True iff sigma(sigma(t)) == t^2 for every element of a finite carrier."""
    return all(F.sigma(F.sigma(t)) == F.mul(t, t) for t in F.elements())


def f2_identity() -> TitsField:
    return TitsField(1, 0b11, sigma_exp=0, name="F2")


def f8_t4() -> TitsField:
    """F8 = F2[x]/(x^3+x+1) with sigma(t) = t^4."""
    return TitsField(3, 0b1011, sigma_exp=2, name="F8")


def f4_square() -> TitsField:
    """F4 with sigma(t) = t^2, which is not a Tits endomorphism."""
    return TitsField(2, 0b111, sigma_exp=1, name="F4")


class BiPolynomial:
    """Immutable polynomial sum c_ij a^i b^j over a TitsField."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: "BiPolynomialRing", terms: dict):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", {k: v for k, v in terms.items() if v})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, key, value):
        raise AttributeError("BiPolynomial is immutable")

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, BiPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self.terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        return self.ring.add(self, other)

    def __mul__(self, other):
        return self.ring.mul(self, other)

    __sub__ = __add__

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items()):
            mono = "*".join(s for s in (_var("a", i), _var("b", j)) if s)
            coef = "" if c == 1 and mono else str(c)
            parts.append("*".join(s for s in (coef, mono) if s))
        return " + ".join(parts)


def _var(name, e):
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


class BiPolynomialRing:
    """K[a, b] for a TitsField K.

    sigma: coefficients by K.sigma, a -> b, b -> a^2.
    tau: coefficients by K.tau, and a <-> b when ``swap`` is set.
    """

    def __init__(self, base: TitsField, swap: bool = True):
        self.base = base
        self.swap = swap
        self.characteristic = 2
        self.zero = BiPolynomial(self, {})
        self.one = BiPolynomial(self, {(0, 0): 1})
        self.a = BiPolynomial(self, {(1, 0): 1})
        self.b = BiPolynomial(self, {(0, 1): 1})

    def __repr__(self):
        return f"BiPolynomialRing({self.base.name}, tau={'swap' if self.swap else 'id'})"

    def constant(self, c: int) -> BiPolynomial:
        return BiPolynomial(self, {(0, 0): c})

    def monomial(self, i: int, j: int, c: int = 1) -> BiPolynomial:
        return BiPolynomial(self, {(i, j): c})

    def coerce(self, x):
        if isinstance(x, BiPolynomial):
            return x
        return self.constant(x)

    def add(self, p, q):
        p, q = self.coerce(p), self.coerce(q)
        out = dict(p.terms)
        for k, v in q.terms.items():
            out[k] = out.get(k, 0) ^ v
        return BiPolynomial(self, out)

    sub = add

    def neg(self, p):
        return p

    def mul(self, p, q):
        p, q = self.coerce(p), self.coerce(q)
        K = self.base
        out: dict = {}
        for (i, j), c in p.terms.items():
            for (k, l), d in q.terms.items():
                key = (i + k, j + l)
                out[key] = out.get(key, 0) ^ K.mul(c, d)
        return BiPolynomial(self, out)

    def pow(self, p, e: int):
        out = self.one
        while e:
            if e & 1:
                out = self.mul(out, p)
            p = self.mul(p, p)
            e >>= 1
        return out

    def sigma(self, p):
        K = self.base
        # a^i b^j -> b^i a^(2j)
        return BiPolynomial(self, _merge(((2 * j, i), K.sigma(c)) for (i, j), c in p.terms.items()))

    def tau(self, p):
        K = self.base
        if self.swap:
            return BiPolynomial(self, _merge(((j, i), K.tau(c)) for (i, j), c in p.terms.items()))
        return BiPolynomial(self, _merge(((i, j), K.tau(c)) for (i, j), c in p.terms.items()))

    def random(self, rng: random.Random, max_deg: int = 3, density: float = 0.5):
        terms = {}
        for i in range(max_deg + 1):
            for j in range(max_deg + 1):
                if rng.random() < density:
                    terms[(i, j)] = self.base.random(rng)
        return BiPolynomial(self, terms)


def _merge(items: Iterable) -> dict:
    out: dict = {}
    for k, v in items:
        out[k] = out.get(k, 0) ^ v
    return out

