"""Root-group calculus in a Moufang octagon over an octagonal set (K, sigma).

Elements of U_[2,7] are kept in the normal form

    x2(a2) y2(b2) x3(a3) x4(a4) y4(b4) x5(a5) x6(a6) y6(b6) x7(a7)

and are represented by the tuple of the nine coordinates.  ``collect``
multiplies on the right by one generator using the nine shuffle rules; the
generic ``collect_word`` rewrites an arbitrary generator word by adjacent
swaps driven by the relation table, which gives an independent second
route for the same products.

Even root groups carry pairs: x_i(u, v) = x_i(u) y_i(v), with the law
(a, b)(a', b') = (a + a' + b^sigma b', b + b').  Everything here lives in
characteristic 2, so all signs disappear.
"""

from __future__ import annotations

from typing import NamedTuple

from nestedroots.algebra.fields import BiPolynomialRing, TitsField, tits_sigma_check
from nestedroots.polygon import relations as rel

__all__ = [
    "SigmaError",
    "OctagonElement",
    "OctagonEngine",
    "octagon_commutator",
    "octagon_commutator_closed",
    "octagon_product_formula",
    "octagon_product_closed",
    "even_mul",
    "even_inv",
]

ORDER = rel.OCTAGON_ORDER
_POS = {g: i for i, g in enumerate(ORDER)}
_INDEX = {g: int(g[1]) for g in ORDER}


class SigmaError(ValueError):
    """The coefficient ring does not carry a Tits endomorphism."""


class OctagonElement(NamedTuple):
    a2: object
    b2: object
    a3: object
    a4: object
    b4: object
    a5: object
    a6: object
    b6: object
    a7: object

    def word(self):
        """The normal-form word as (generator, coefficient) pairs, zeros dropped."""
        return [(g, c) for g, c in zip(ORDER, self) if c]


def even_mul(ring, p, q):
    """(a, b)(a', b') = (a + a' + b^sigma b', b + b')."""
    a, b = p
    a2, b2 = q
    return ring.add(ring.add(a, a2), ring.mul(ring.sigma(b), b2)), ring.add(b, b2)


def even_inv(ring, p):
    """(a, b)^-1 = (a + b^(sigma+1), b) in characteristic 2."""
    a, b = p
    return ring.add(a, ring.mul(ring.sigma(b), b)), b


def check_ring(ring) -> None:
    if getattr(ring, "characteristic", None) != 2:
        raise SigmaError("octagonal sets live in characteristic 2")
    if isinstance(ring, TitsField):
        if not tits_sigma_check(ring):
            raise SigmaError(f"{ring!r}: sigma^2 is not the Frobenius")
        return
    if isinstance(ring, BiPolynomialRing):
        if not tits_sigma_check(ring.base):
            raise SigmaError(f"{ring!r}: sigma^2 is not the Frobenius on the coefficients")
        for x in (ring.a, ring.b):
            if ring.sigma(ring.sigma(x)) != ring.mul(x, x):
                raise SigmaError(f"{ring!r}: sigma^2 is not the Frobenius")
        return
    raise SigmaError(f"unsupported coefficient ring {ring!r}")


class OctagonEngine:
    """Collection in U_[2,7] over a fixed coefficient ring."""

    def __init__(self, ring, check: bool = True):
        if check:
            check_ring(ring)
        self.ring = ring
        z = ring.zero
        self.identity = OctagonElement(z, z, z, z, z, z, z, z, z)

    def element(self, **coords) -> OctagonElement:
        return self.identity._replace(**coords)

    def is_identity(self, g) -> bool:
        return not any(g)

    # the nine shuffle rules
    def collect(self, g: OctagonElement, gen: str, z) -> OctagonElement:
        """g * gen(z) in normal form."""
        R = self.ring
        add, mul, sig = R.add, R.mul, R.sigma
        a2, b2, a3, a4, b4, a5, a6, b6, a7 = g
        if gen == "x2":
            return OctagonElement(add(a2, z), b2, a3, add(a4, mul(a7, z)), b4, a5, a6, b6, a7)
        if gen == "y2":
            return OctagonElement(
                add(a2, mul(sig(b2), z)),
                add(b2, z),
                add(a3, mul(b4, z)),
                add(a4, mul(a5, z)),
                b4,
                add(a5, mul(a7, sig(z))),
                add(a6, mul(sig(a7), z)),
                b6,
                a7,
            )
        if gen == "x3":
            return OctagonElement(a2, b2, add(a3, z), add(a4, mul(b6, z)), b4, a5, a6, b6, a7)
        if gen == "x4":
            return OctagonElement(a2, b2, a3, add(a4, z), b4, a5, a6, b6, a7)
        if gen == "y4":
            return OctagonElement(
                a2, b2, a3, add(a4, mul(sig(b4), z)), add(b4, z), add(a5, mul(b6, z)), add(a6, mul(a7, z)), b6, a7
            )
        if gen == "x5":
            return OctagonElement(a2, b2, a3, a4, b4, add(a5, z), a6, b6, a7)
        if gen == "x6":
            return OctagonElement(a2, b2, a3, a4, b4, a5, add(a6, z), b6, a7)
        if gen == "y6":
            return OctagonElement(a2, b2, a3, a4, b4, a5, add(a6, mul(sig(b6), z)), add(b6, z), a7)
        if gen == "x7":
            return OctagonElement(a2, b2, a3, a4, b4, a5, a6, b6, add(a7, z))
        if gen == "y6inv":
            # y6(z)^-1 = x6(z^(sigma+1)) y6(z)
            g = self.collect(g, "x6", mul(sig(z), z))
            return self.collect(g, "y6", z)
        raise ValueError(f"generator {gen!r} outside the band x2..x7")

    def collect_all(self, g, word) -> OctagonElement:
        for gen, z in word:
            g = self.collect(g, gen, z)
        return g

    def from_word(self, word) -> OctagonElement:
        return self.collect_all(self.identity, word)

    def multiply(self, g, h) -> OctagonElement:
        return self.collect_all(g, h.word())

    def inverse(self, g) -> OctagonElement:
        out = self.identity
        for gen, z in reversed(g.word()):
            out = self.collect_all(out, self._gen_inverse(gen, z))
        return out

    def _gen_inverse(self, gen, z):
        if gen.startswith("y"):
            return [("x" + gen[1], self.ring.mul(self.ring.sigma(z), z)), (gen, z)]
        return [(gen, z)]

    def commutator(self, g, h) -> OctagonElement:
        """[g, h] = g^-1 h^-1 g h."""
        out = self.multiply(self.inverse(g), self.inverse(h))
        return self.multiply(self.multiply(out, g), h)

    # generic collection from the relation table
    def collect_word(self, word, max_steps: int = 100_000) -> OctagonElement:
        """Normal form of a generator word by adjacent rewriting.

        Repeatedly takes the leftmost place where two neighbours are out of
        order (or share a root group) and rewrites f g = g f [f, g] using the
        relation table.
        """
        R = self.ring
        w = []
        for gen, z in word:
            if gen == "y6inv":
                w.append(("x6", R.mul(R.sigma(z), z)))
                w.append(("y6", z))
            elif gen not in _POS:
                raise ValueError(f"generator {gen!r} outside the band x2..x7")
            else:
                w.append((gen, z))
        w = [p for p in w if p[1]]
        for _ in range(max_steps):
            for i in range(len(w) - 1):
                (f, s), (g, t) = w[i], w[i + 1]
                if _INDEX[f] == _INDEX[g] and _POS[f] >= _POS[g]:
                    w[i : i + 2] = self._merge(f, s, g, t)
                    break
                if _POS[f] > _POS[g]:
                    comm = rel.lookup(rel.OCTAGON_TABLE, f, g) or ()
                    env = {"a": s, "b": t}
                    tail = [(h, e(R, env)) for h, e in comm]
                    w[i : i + 2] = [(g, t), (f, s)] + [p for p in tail if p[1]]
                    break
            else:
                break
        else:  # pragma: no cover - the band is nilpotent, so this cannot loop
            raise RuntimeError("collection did not terminate")
        g = self.identity
        for gen, z in w:
            g = g._replace(**{_coord(gen): R.add(getattr(g, _coord(gen)), z)})
        return g

    def _merge(self, f, s, g, t):
        R = self.ring
        if f[0] == "x" and g[0] == "x":
            z = R.add(s, t)
            return [(f, z)] if z else []
        if f[0] == "y" and g[0] == "x":
            return [(g, t), (f, s)]
        # y(s) y(t) = x(s^sigma t) y(s + t)
        a, b = even_mul(R, (R.zero, s), (R.zero, t))
        out = []
        if a:
            out.append(("x" + f[1], a))
        if b:
            out.append((f, b))
        return out


def _coord(gen):
    return ("a" if gen[0] == "x" else "b") + gen[1]


def _basis_word(key, ring, a, b):
    env = {"a": a, "b": b}
    return [(g, e(ring, env)) for g, e in rel.OCTAGON_BASIS[key]]


def octagon_commutator(t, u1, u2, ring=None, engine: OctagonEngine | None = None) -> OctagonElement:
    """[x1(t), x8(u1, u2)] by collection from the relation table.

    With u = u1 + u2^(sigma+1) one has x8(u1) y8(u2) = x8(u) y8(u2)^-1, hence
    [x1(t), x8(u1, u2)] = [x1(t), y8(u2)^-1] [x1(t), x8(u)]^(y8(u2)^-1).
    The conjugate is expanded factor by factor as f^c = f [f, c].
    """
    E = engine or OctagonEngine(ring)
    R = E.ring
    u = R.add(u1, R.mul(R.sigma(u2), u2))
    g = E.collect_all(E.identity, _basis_word(("x1", "y8inv"), R, t, u2))
    env_b = u2
    for gen, z in _basis_word(("x1", "x8"), R, t, u):
        g = E.collect(g, gen, z)
        comm = rel.OCTAGON_CONJUGATION.get((gen, "y8inv"))
        if comm is None:
            raise KeyError(f"no conjugation rule for {gen}")
        env = {"a": z, "b": env_b}
        g = E.collect_all(g, [(h, e(R, env)) for h, e in comm])
    return g


def octagon_commutator_closed(t, u1, u2, ring, corrected: bool = False) -> OctagonElement:
    """The closed form of [x1(t), x8(u1, u2)], evaluated directly.

    The published a6 coordinate carries the summand t^(sigma+1) u1^sigma
    u2^(sigma+1); expanding (u1 + u2^(sigma+1))^(sigma+1) in full gives
    t^(sigma+1) u1 u2^(sigma+2) instead.  ``corrected=True`` uses the latter.
    Both agree whenever sigma is the identity.
    """
    R = ring
    add, mul, pw, sg = R.add, R.mul, R.pow, R.sigma

    def m(*factors):
        out = R.one
        for f in factors:
            out = mul(out, f)
        return out

    ts, u1s, u2s = sg(t), sg(u1), sg(u2)
    ts1 = mul(ts, t)  # t^(sigma+1)
    ts2 = mul(ts1, t)  # t^(sigma+2)
    u2s1 = mul(u2s, u2)
    u2s2 = mul(u2s1, u2)
    u22s3 = m(pw(u2s, 2), pw(u2, 3))
    u22s2 = m(pw(u2s, 2), pw(u2, 2))
    a2 = add(m(ts1, u1), m(ts1, u2s1))
    b2 = m(t, u2)
    a3 = add(add(m(ts1, u2s2), m(ts1, u1, u2)), m(ts1, u1s))
    a4 = add(add(m(ts2, u1s, u2s1), m(ts2, pw(u1, 2), u2)), m(ts2, u22s3))
    b4 = m(ts, u1)
    a5 = add(add(m(ts1, u1s, u2s), m(ts1, u22s2)), m(ts1, pw(u1, 2)))
    cross6 = m(ts1, u1, u2s2) if corrected else m(ts1, u1s, u2s1)
    a6 = add(add(m(ts1, pw(u1, 2), u2), cross6), m(ts1, u1s, u1))
    b6 = add(m(t, u1), m(t, u2s1))
    a7 = add(add(m(t, u1s), m(t, u1, u2)), m(t, u2s2))
    return OctagonElement(a2, b2, a3, a4, b4, a5, a6, b6, a7)


def octagon_product_formula(t1, u1, u2, t2, v1, v2, ring=None, engine=None) -> OctagonElement:
    """[x1(t1), x8(u1, u2)] [x1(t2), x8(v1, v2)] by collection."""
    E = engine or OctagonEngine(ring)
    g = octagon_commutator(t1, u1, u2, engine=E)
    h = octagon_commutator(t2, v1, v2, engine=E)
    return E.multiply(g, h)


def octagon_product_closed(t1, u1, u2, t2, v1, v2, ring, corrected: bool = False) -> OctagonElement:
    """The closed form of the product of two basis commutators.

    ``corrected`` swaps the same a6 summand as in the single commutator.
    """
    R = ring
    add, mul, pw, sg = R.add, R.mul, R.pow, R.sigma

    def m(*factors):
        out = R.one
        for f in factors:
            out = mul(out, f)
        return out

    def s(*terms):
        out = R.zero
        for x in terms:
            out = add(out, x)
        return out

    t1s, t2s = sg(t1), sg(t2)
    u1s, u2s, v1s, v2s = sg(u1), sg(u2), sg(v1), sg(v2)
    t1s1, t2s1 = mul(t1s, t1), mul(t2s, t2)
    t1s2, t2s2 = mul(t1s1, t1), mul(t2s1, t2)
    # recurring blocks
    U = add(u1, mul(u2s, u2))  # u1 + u2^(sigma+1)
    V = add(v1, mul(v2s, v2))
    P3u = s(m(u2s, u2, u2), m(u1, u2), u1s)  # u2^(sigma+2) + u1 u2 + u1^sigma
    P3v = s(m(v2s, v2, v2), m(v1, v2), v1s)
    P5u = s(m(u1s, u2s), m(pw(u2s, 2), pw(u2, 2)), pw(u1, 2))
    P5v = s(m(v1s, v2s), m(pw(v2s, 2), pw(v2, 2)), pw(v1, 2))
    P4u = s(m(u1s, u2s, u2), m(pw(u1, 2), u2), m(pw(u2s, 2), pw(u2, 3)))
    P4v = s(m(v1s, v2s, v2), m(pw(v1, 2), v2), m(pw(v2s, 2), pw(v2, 3)))
    if corrected:
        P6u = s(m(pw(u1, 2), u2), m(u1, u2s, u2, u2), m(u1s, u1))
        P6v = s(m(pw(v1, 2), v2), m(v1, v2s, v2, v2), m(v1s, v1))
    else:
        P6u = s(m(pw(u1, 2), u2), m(u1s, u2s, u2), m(u1s, u1))
        P6v = s(m(pw(v1, 2), v2), m(v1s, v2s, v2), m(v1s, v1))

    a2 = s(m(t1s1, U), m(t2s1, V), m(t1s, t2, u2s, v2))
    b2 = add(m(t1, u2), m(t2, v2))
    a3 = s(m(t1s1, P3u), m(t2s1, P3v), m(t1s, t2, u1, v2))
    a4 = s(
        m(t1s2, P4u),
        m(t1, P3u, V, t2s1),
        m(t1s1, P5u, t2, v2),
        m(t1, U, P3v, t2s1),
        m(t2s2, P4v),
        m(pw(t1, 2), t2s, u1s, v1),
    )
    b4 = add(m(t1s, u1), m(t2s, v1))
    a5 = s(m(t1s1, P5u), m(t1, P3u, t2s, v2s), m(t1, U, t2s, v1), m(t2s1, P5v))
    a6 = s(
        m(t1s1, P6u),
        m(t1s, P5u, t2, v2),
        m(t1, P3u, t2s, v1),
        m(t2s1, P6v),
        m(t1s, t2, add(u1s, m(u2s, u2, u2)), V),
    )
    b6 = add(m(t1, U), m(t2, V))
    a7 = add(m(t1, P3u), m(t2, P3v))
    return OctagonElement(a2, b2, a3, a4, b4, a5, a6, b6, a7)
