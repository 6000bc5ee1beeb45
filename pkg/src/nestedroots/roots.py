"""Roots as half-spaces of the chamber set.

A root is stored by its vector v in root space; the chamber w lies in the
root iff w^-1(v) is a positive vector.  Pairs of distinct roots split by the
value of B(v_a, v_b): |B| < 1 means the walls meet (finite dihedral pair),
B >= 1 means one root contains the other, B <= -1 means the pair is not
prenilpotent.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from nestedroots import kernels
from nestedroots.coxeter import DEFAULT_DEPTH, CoxeterType, GroupElement, enumerate_elements

__all__ = [
    "Root",
    "PairKind",
    "PairClass",
    "IntervalError",
    "simple_roots",
    "classify_pair",
    "contains_root",
    "interval_closed",
    "interval_open",
    "interval_contains",
    "nested_interval_open",
    "interval_open_any",
    "residue_roots",
    "crossing_sequence",
    "root_origin",
    "enumerate_roots",
    "positive_roots",
]


class IntervalError(ValueError):
    """Requested an interval that is not a finite set."""


class Root:
    """A root of the Coxeter complex, identified with its vector."""

    __slots__ = ("ctype", "vec", "depth", "_hash", "_float", "_sign")

    def __init__(self, ctype: CoxeterType, vec, depth: int | None = None):
        self.ctype = ctype
        self.vec = tuple(tuple(x) for x in vec)
        self.depth = depth
        self._hash = None
        self._float = None
        self._sign = None

    def __eq__(self, other):
        return isinstance(other, Root) and self.vec == other.vec and self.ctype == other.ctype

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.vec)
        return self._hash

    def __neg__(self) -> "Root":
        F = self.ctype.field
        return Root(self.ctype, tuple(F.neg(x) for x in self.vec), self.depth)

    def __repr__(self):
        return f"Root({self.float_vec()})"

    def float_vec(self):
        if self._float is None:
            F = self.ctype.field
            self._float = tuple(round(F.to_float(x), 6) for x in self.vec)
        return self._float

    @property
    def sign(self) -> int:
        """+1 for positive roots (those containing the identity chamber)."""
        if self._sign is None:
            self._sign = self.ctype.vector_sign(self.vec)
        return self._sign

    @property
    def is_positive(self) -> bool:
        return self.sign > 0

    def wall(self) -> "Root":
        """The positive root with the same wall."""
        return self if self.is_positive else -self

    def contains(self, w: GroupElement) -> bool:
        return self.ctype.vector_sign(w.apply_inverse(self.vec)) > 0

    __contains__ = contains

    def translate(self, w: GroupElement) -> "Root":
        return Root(self.ctype, w.apply(self.vec))

    def reflection(self) -> GroupElement:
        """r_a(v) = v - 2B(v, v_a) v_a."""
        ct = self.ctype
        F = ct.field
        n = ct.rank
        coef = [ct.bilinear(ct.simple_root(j), self.vec) for j in range(n)]
        cols = []
        for j in range(n):
            e = ct.simple_root(j)
            cols.append(tuple(F.sub(e[i], F.mul(coef[j], self.vec[i])) for i in range(n)))
        mat = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        return GroupElement(ct, mat, mat)

    def sort_key(self):
        return (self.depth if self.depth is not None else 1 << 30, self.vec)


def simple_roots(ctype: CoxeterType) -> list:
    return [Root(ctype, ctype.simple_root(s), 0) for s in ctype.generators]


class PairKind(enum.Enum):
    EQUAL = "equal"
    OPPOSITE = "opposite"
    FINITE = "finite-dihedral"
    NESTED = "nested"
    NON_PRENILPOTENT = "non-prenilpotent"


@dataclass(frozen=True)
class PairClass:
    kind: PairKind
    order: int | None = None  # o(r_a r_b) for finite pairs
    first_inside: bool | None = None  # nested pairs: True iff a is strictly inside b

    def __str__(self):
        if self.kind is PairKind.FINITE:
            return f"{self.kind.value}(order={self.order})"
        if self.kind is PairKind.NESTED:
            return f"nested({'a<b' if self.first_inside else 'b<a'})"
        return self.kind.value


def _pair_value_sign(ctype, a: Root, b: Root):
    """Signs of 2B - 2 and 2B + 2."""
    F = ctype.field
    val = ctype.bilinear(a.vec, b.vec)
    two = F.from_int(2)
    return F.sign(F.sub(val, two)), F.sign(F.add(val, two))


def nesting_direction(a: Root, b: Root, max_radius: int = 256) -> bool:
    """True if a is strictly contained in b, False if b in a.

    Breadth-first search from the identity for a chamber lying in exactly
    one of the two roots.
    """
    ct = a.ctype
    seen = {ct.identity}
    layer = [ct.identity]
    for _ in range(max_radius + 1):
        nxt = []
        for g in layer:
            ina, inb = a.contains(g), b.contains(g)
            if ina != inb:
                return inb
            for s in ct.generators:
                h = g.right_mul(s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        layer = nxt
    raise RuntimeError("no separating chamber found within radius")


def classify_pair(a: Root, b: Root) -> PairClass:
    if a.ctype != b.ctype:
        raise TypeError("roots of different Coxeter types")
    if a == b:
        return PairClass(PairKind.EQUAL)
    if a == -b:
        return PairClass(PairKind.OPPOSITE)
    ct = a.ctype
    hi, lo = _pair_value_sign(ct, a, b)
    if hi < 0 < lo:
        from nestedroots.hyperbolic import rotation_order

        return PairClass(PairKind.FINITE, order=rotation_order(ct, a.vec, b.vec))
    if hi >= 0:
        return PairClass(PairKind.NESTED, first_inside=nesting_direction(a, b))
    return PairClass(PairKind.NON_PRENILPOTENT)


def contains_root(a: Root, b: Root) -> bool:
    """Whether the half-space a is contained in the half-space b."""
    c = classify_pair(a, b)
    if c.kind is PairKind.EQUAL:
        return True
    return c.kind is PairKind.NESTED and bool(c.first_inside)


def _span_coefficient_signs(ct: CoxeterType, a: Root, b: Root, g: Root):
    """Signs of the coefficients of v_g = x v_a + y v_b (v_g in the span)."""
    F = ct.field
    ab = ct.bilinear(a.vec, b.vec)
    ga = ct.bilinear(g.vec, a.vec)
    gb = ct.bilinear(g.vec, b.vec)
    # with doubled values: x ~ 2 ga - ab gb, y ~ 2 gb - ab ga (common positive factor)
    x = F.sub(F.scale(ga, 2), F.mul(ab, gb))
    y = F.sub(F.scale(gb, 2), F.mul(ab, ga))
    return F.sign(x), F.sign(y)


def residue_roots(a: Root, b: Root) -> list:
    """All roots whose walls pass through the intersection of the walls of a and b.

    For rank 2 this is the whole (finite) root system.  In rank 3 the
    intersection point is folded to a vertex of the fundamental chamber,
    and the dihedral root system of that vertex is carried back.
    """
    ct = a.ctype
    if ct.rank == 2:
        return list(_dihedral_roots(ct, ct.identity, (0, 1)))
    if ct.is_spherical:
        F = ct.field
        out = []
        for g in enumerate_roots(ct, _spherical_depth(ct)):
            if not any(kernels.det3(a.vec, b.vec, g.vec, F.reduction)):
                out.append(g)
        return out
    from nestedroots.hyperbolic import vertex_residue

    R, J = vertex_residue(ct, a.vec, b.vec)
    return list(_dihedral_roots(ct, R.chamber, tuple(sorted(J))))


def _spherical_depth(ct: CoxeterType) -> int:
    return len(enumerate_elements(ct, 64)[-1].word)


def _dihedral_roots(ct: CoxeterType, w: GroupElement, J) -> list:
    """w applied to all roots of the standard parabolic W_J (|J| = 2)."""
    s, t = J
    m = ct.m[s][t]
    roots = {}
    g = ct.identity
    # the 2m elements of W_J along alternating words
    elems = [ct.identity]
    for start in (s, t):
        g = ct.identity
        letters = (start, t if start == s else s)
        for i in range(m):
            g = g.right_mul(letters[i % 2])
            elems.append(g)
    for u in elems:
        for r in (s, t):
            v = w.apply(u.column(r))
            roots[v] = True
    out = [Root(ct, v) for v in roots]
    assert len(out) == 2 * m, "dihedral root count mismatch"
    out.sort(key=lambda r: r.vec)
    return out


def interval_closed(a: Root, b: Root) -> list:
    """[a, b] for a pair whose walls meet: roots through the common vertex
    whose vectors are nonnegative combinations of v_a and v_b."""
    c = classify_pair(a, b)
    if c.kind is PairKind.EQUAL:
        return [a]
    if c.kind is not PairKind.FINITE:
        raise IntervalError(f"interval of a {c.kind.value} pair is not offered as a set")
    ct = a.ctype
    out = []
    for g in residue_roots(a, b):
        x, y = _span_coefficient_signs(ct, a, b, g)
        if x >= 0 and y >= 0:
            out.append(g)
    out.sort(key=lambda r: r.vec)
    return out


def interval_open(a: Root, b: Root) -> list:
    return [g for g in interval_closed(a, b) if g != a and g != b]


def interval_contains(a: Root, b: Root, g: Root) -> bool:
    """Membership of g in [a, b], also for nested pairs.

    For a strictly inside b the closed interval is {g : a <= g <= b}.
    """
    c = classify_pair(a, b)
    if c.kind is PairKind.FINITE:
        return g in interval_closed(a, b)
    if c.kind is PairKind.EQUAL:
        return g == a
    if c.kind is PairKind.NESTED:
        small, big = (a, b) if c.first_inside else (b, a)
        return contains_root(small, g) and contains_root(g, big)
    raise IntervalError(f"interval of a {c.kind.value} pair")


def nested_interval_open(a: Root, b: Root) -> list:
    """(a, b) for a nested pair: the roots g with small < g < big.

    Take x in the smaller root next to its wall and y outside the larger
    root next to its wall.  Every g in the interval contains x and misses
    y, so its wall is crossed by a minimal gallery from x to y; those
    finitely many candidates are then tested directly.
    """
    c = classify_pair(a, b)
    if c.kind is not PairKind.NESTED:
        raise IntervalError(f"not a nested pair: {c}")
    small, big = (a, b) if c.first_inside else (b, a)
    x, _ = root_origin(small)
    w, u = root_origin(big)
    y = w.right_mul(u)
    out = []
    for r in crossing_sequence(x.inverse() * y):
        g = r.translate(x)
        if g == small or g == big:
            continue
        if contains_root(small, g) and contains_root(g, big):
            out.append(g)
    out.sort(key=lambda r: r.vec)
    return out


def interval_open_any(a: Root, b: Root) -> list:
    """(a, b) for any prenilpotent pair of distinct roots."""
    c = classify_pair(a, b)
    if c.kind is PairKind.FINITE:
        return interval_open(a, b)
    if c.kind is PairKind.NESTED:
        return nested_interval_open(a, b)
    raise IntervalError(f"interval of a {c.kind.value} pair")


def crossing_sequence(w: GroupElement) -> list:
    """Roots a_i = s_1 ... s_{i-1}(a_{s_i}) crossed by the standard gallery from 1 to w.

    a_i is the root containing chamber i-1 but not chamber i.
    """
    ct = w.ctype
    out = []
    g = ct.identity
    for s in w.word:
        out.append(Root(ct, g.column(s)))
        g = g.right_mul(s)
    return out


def root_origin(a: Root):
    """Return (w, u) with v_a = w(e_u).

    A positive non-simple root has some s with B(e_s, v) > 0, and s(v) is a
    positive root of smaller depth; descending this way ends at a simple root.
    """
    ct = a.ctype
    F = ct.field
    v = a.vec
    word = []
    if a.sign < 0:
        # -v = w(e_u) gives v = w s_u (e_u)
        w, u = root_origin(-a)
        return w.right_mul(u), u
    while True:
        nz = [i for i, x in enumerate(v) if any(x)]
        if len(nz) == 1 and v[nz[0]] == F.one:
            break
        for s in ct.generators:
            if F.sign(ct.bilinear(ct.simple_root(s), v)) > 0:
                v = ct.reflect_vector(s, v)
                word.append(s)
                break
        else:  # pragma: no cover - impossible for a genuine root
            raise ValueError("vector is not a root")
    return ct.element(word), nz[0]


def enumerate_roots(ctype: CoxeterType, depth: int = DEFAULT_DEPTH) -> list:
    """All roots w(a_s) with l(w) <= depth, together with their negatives.

    Each root carries the smallest l(w) found; the list is sorted by that
    depth and then by vector, which makes every scan deterministic.
    """
    found = {}
    for w in enumerate_elements(ctype, depth):
        n = w.length
        for s in ctype.generators:
            v = w.column(s)
            if v not in found:
                found[v] = n
    F = ctype.field
    for v, n in list(found.items()):
        nv = tuple(F.neg(x) for x in v)
        if nv not in found:
            found[nv] = n
    out = [Root(ctype, v, n) for v, n in found.items()]
    out.sort(key=Root.sort_key)
    return out


def positive_roots(ctype: CoxeterType, depth: int = DEFAULT_DEPTH) -> list:
    return [r for r in enumerate_roots(ctype, depth) if r.is_positive]
