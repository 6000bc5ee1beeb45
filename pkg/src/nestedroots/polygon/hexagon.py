"""Root-group calculus in a Moufang hexagon over the hexagonal system (1/K).

Elements of U_[2,5] are kept in the normal form x2(A) x3(B) x4(C) x5(D).
Inside this band only [x3, x5] is non-trivial, so right multiplication by a
generator is a one-line update; the table lookups below keep the relation
data in :mod:`nestedroots.polygon.relations`.
"""

from __future__ import annotations

from typing import NamedTuple

from nestedroots.algebra.fields import PrimeField
from nestedroots.algebra.hexsys import HexagonalSystem1K
from nestedroots.polygon import relations as rel

__all__ = [
    "HexagonError",
    "HexagonElement",
    "HexagonEngine",
    "hexagon_commutator",
    "hexagon_product_formula",
    "hexagon_product_closed",
    "remark_a",
    "remark_b",
    "remark_c",
    "sharp_preimage_check",
]

ORDER = rel.HEXAGON_ORDER
_POS = {g: i for i, g in enumerate(ORDER)}


class HexagonError(ValueError):
    """The hexagonal data is not of type (1/K) over a prime field."""


class HexagonElement(NamedTuple):
    A: int
    B: int
    C: int
    D: int

    def word(self):
        return [(g, c) for g, c in zip(ORDER, self) if c]


class HexagonEngine:
    def __init__(self, K):
        if not isinstance(K, PrimeField):
            raise HexagonError(f"(1/K) collection needs a prime field, got {K!r}")
        self.K = K
        self.system = HexagonalSystem1K(K)
        self.identity = HexagonElement(0, 0, 0, 0)

    def _rule(self, f, g, a, b):
        word = rel.lookup(rel.HEXAGON_TABLE, f, g)
        if word is None:
            return []
        env = {"a": a, "b": b}
        return [(h, e(self.K, env, self.system)) for h, e in word]

    def collect(self, g: HexagonElement, gen: str, z) -> HexagonElement:
        """g * gen(z) in normal form."""
        K = self.K
        A, B, C, D = g
        if gen == "x2":
            return HexagonElement(K.add(A, z), B, C, D)
        if gen == "x3":
            # x5(D) x3(z) = x3(z) x5(D) [x5(D), x3(z)] with [x5, x3] = [x3, x5]^-1
            extra = self._rule("x3", "x5", z, D)
            C2 = C
            for h, c in extra:
                assert h == "x4"
                C2 = K.sub(C2, c)
            return HexagonElement(A, K.add(B, z), C2, D)
        if gen == "x4":
            return HexagonElement(A, B, K.add(C, z), D)
        if gen == "x5":
            return HexagonElement(A, B, C, K.add(D, z))
        raise ValueError(f"generator {gen!r} outside the band x2..x5")

    def collect_all(self, g, word):
        for gen, z in word:
            g = self.collect(g, gen, z)
        return g

    def multiply(self, g, h):
        return self.collect_all(g, h.word())

    def inverse(self, g):
        K = self.K
        out = self.identity
        for gen, z in reversed(g.word()):
            out = self.collect(out, gen, K.neg(z))
        return out

    def commutator_16(self, a, t) -> HexagonElement:
        """[x1(a), x6(t)] from the relation table."""
        return self.collect_all(self.identity, self._rule("x1", "x6", a, t))


def hexagon_commutator(a, t, K) -> HexagonElement:
    return HexagonEngine(K).commutator_16(a, t)


def hexagon_product_formula(a1, t1, a2, t2, K, engine: HexagonEngine | None = None) -> HexagonElement:
    """[x1(a1), x6(t1)] [x1(a2), x6(t2)] by collection."""
    E = engine or HexagonEngine(K)
    return E.multiply(E.commutator_16(a1, t1), E.commutator_16(a2, t2))


def hexagon_product_closed(a1, t1, a2, t2, K) -> HexagonElement:
    """The four-coordinate closed form of the same product."""
    H = HexagonalSystem1K(K)
    m, add, neg = K.mul, K.add, K.neg
    A = neg(add(m(t1, H.N(a1)), m(t2, H.N(a2))))
    B = add(m(t1, H.sharp(a1)), m(t2, H.sharp(a2)))
    C = add(add(m(m(t1, t1), H.N(a1)), m(m(t2, t2), H.N(a2))), H.T(m(t1, a1), m(t2, H.sharp(a2))))
    D = neg(add(m(t1, a1), m(t2, a2)))
    return HexagonElement(A, B, C, D)


def remark_a(k, K, engine=None):
    """Returns (collected, expected) for [x1(-k), x6(1/k)][x1(-k), x6(-1/k)] = x4(k)."""
    E = engine or HexagonEngine(K)
    ki = K.inv(k)
    got = hexagon_product_formula(K.neg(k), ki, K.neg(k), K.neg(ki), K, E)
    return got, HexagonElement(0, 0, k % K.p, 0)


def remark_b(v, k, K, engine=None):
    """[x1(v), x6(k)][x1(-v), x6(k)] = x3(2k v^#) x4(3k^2 N(v))."""
    E = engine or HexagonEngine(K)
    H = E.system
    got = hexagon_product_formula(v, k, K.neg(v), k, K, E)
    exp = HexagonElement(0, K.mul(K(2), K.mul(k, H.sharp(v))), K.mul(K(3), K.mul(K.mul(k, k), H.N(v))), 0)
    return got, exp


def remark_c(v, k, K, engine=None):
    """[x1(v), x6(k^3)][x1(kv), x6(-1)]
    = x3((k^3 - k^2) v^#) x4(N(v)(k^6 + k^3 - 3k^5)) x5((k - k^3) v)."""
    E = engine or HexagonEngine(K)
    H = E.system
    p = K.pow
    got = hexagon_product_formula(v, p(k, 3), K.mul(k, v), K.neg(1), K, E)
    B = K.mul(K.sub(p(k, 3), p(k, 2)), H.sharp(v))
    C = K.mul(H.N(v), K.sub(K.add(p(k, 6), p(k, 3)), K.mul(K(3), p(k, 5))))
    D = K.mul(K.sub(k, p(k, 3)), v)
    return got, HexagonElement(0, B, C, D)


def sharp_preimage_check(v, K, use_published: bool = False):
    """Produce x3(v) from a product of two basis commutators.

    With v' = v^# and k' = (2 N(v))^-1 the identity of ``remark_b`` gives
    x3(2 k' v'^#) = x3(v^4 / v^3) = x3(v).  The published choice
    k' = (2 N(v^#))^-1 gives x3(v / N(v)) instead; ``use_published`` selects
    it.  Returns (collected, target x3(v) x4(3 k'^2 N(v'))).
    """
    E = HexagonEngine(K)
    H = E.system
    vp = H.sharp(v)
    k = K.inv(K.mul(K(2), H.N(vp) if use_published else H.N(v)))
    got = hexagon_product_formula(vp, k, K.neg(vp), k, K, E)
    target = HexagonElement(0, v % K.p, K.mul(K(3), K.mul(K.mul(k, k), H.N(vp))), 0)
    return got, target
