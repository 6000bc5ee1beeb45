"""Coxeter systems of rank 2 and 3 acting on the geometric representation.

Group elements are exact matrices over Z[c] (c = 2cos(pi/L)) acting on the
root space V with basis e_s.  We work throughout with the doubled Gram
matrix A = 2B, A_ss = 2, A_st = -2cos(pi/m_st), whose entries are algebraic
integers.  The simple reflection s acts by

    v_s <- v_s - sum_t A[s][t] v_t      (other coordinates unchanged).

Chambers of the Coxeter complex are identified with group elements.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Iterator, Sequence

from nestedroots.algebra.cosine_field import CosineField, ExactScalar, cosine_field

__all__ = [
    "CoxeterType",
    "GroupElement",
    "Residue",
    "multiply",
    "left_descents",
    "right_descents",
    "projection",
    "minimal_gallery",
    "distance",
    "enumerate_elements",
    "ADMITTED_LABELS",
    "DEFAULT_DEPTH",
]

ADMITTED_LABELS = (2, 3, 4, 6, 8)
DEFAULT_DEPTH = 8


def _lcm(a, b):
    return a * b // gcd(a, b)


class CoxeterType:
    """A 2-spherical Coxeter matrix of rank 2 or 3.

    Rank 3 types are given as (m01, m02, m12); rank 2 as a single label.
    """

    def __init__(self, labels: Sequence[int] | int):
        if isinstance(labels, int):
            labels = (labels,)
        labels = tuple(int(m) for m in labels)
        if len(labels) == 1:
            self.rank = 2
            pairs = {(0, 1): labels[0]}
        elif len(labels) == 3:
            self.rank = 3
            pairs = {(0, 1): labels[0], (0, 2): labels[1], (1, 2): labels[2]}
        else:
            raise ValueError("expected one label (rank 2) or three labels (rank 3)")
        for m in labels:
            if m not in ADMITTED_LABELS:
                raise ValueError(f"label {m} not in {ADMITTED_LABELS}")
        self.labels = labels
        n = self.rank
        self.m = tuple(
            tuple(1 if s == t else pairs[(min(s, t), max(s, t))] for t in range(n)) for s in range(n)
        )
        L = 1
        for m in labels:
            L = _lcm(L, m)
        self.L = max(L, 2)
        self.field: CosineField = cosine_field(self.L)
        F = self.field
        self.A = tuple(
            tuple(F.from_int(2) if s == t else F.neg(F.double_cos(1, self.m[s][t])) for t in range(n))
            for s in range(n)
        )
        # off-diagonal entries that happen to be integers are applied by scaling
        self._A_int = tuple(
            tuple(self.A[s][t][0] if not any(self.A[s][t][1:]) else None for t in range(n)) for s in range(n)
        )
        self.identity = GroupElement(self, _identity_matrix(F, n), _identity_matrix(F, n), ())

    @classmethod
    def parse(cls, text: str) -> "CoxeterType":
        parts = [p for p in text.replace("(", "").replace(")", "").split(",") if p.strip()]
        return cls(tuple(int(p) for p in parts))

    def __repr__(self):
        return f"CoxeterType({','.join(map(str, self.labels))})"

    def __str__(self):
        return ",".join(map(str, self.labels))

    def __eq__(self, other):
        return isinstance(other, CoxeterType) and other.labels == self.labels

    def __hash__(self):
        return hash(("CoxeterType", self.labels))

    def __reduce__(self):
        return (CoxeterType, (self.labels,))

    @property
    def generators(self) -> range:
        return range(self.rank)

    @cached_property
    def reciprocal_sum(self) -> Fraction:
        return sum((Fraction(1, m) for m in self.labels), Fraction(0))

    @property
    def is_spherical(self) -> bool:
        return self.rank == 2 or self.reciprocal_sum > 1

    @property
    def is_affine(self) -> bool:
        return self.rank == 3 and self.reciprocal_sum == 1

    @property
    def is_hyperbolic(self) -> bool:
        return self.rank == 3 and self.reciprocal_sum < 1

    @property
    def is_complete_graph(self) -> bool:
        """All labels at least 3 (every pair of generators joined in the diagram)."""
        return self.rank == 3 and all(m >= 3 for m in self.labels)

    # a complete-graph rank-3 diagram is a cycle
    is_cyclic = is_complete_graph

    @property
    def is_simply_laced(self) -> bool:
        return all(m in (2, 3) for m in self.labels)

    def bilinear(self, u, v):
        """Doubled form 2B(u, v) as a raw field element."""
        F = self.field
        n = self.rank
        Av = [F.dot(self.A[s], v) for s in range(n)]
        return F.dot(u, Av)

    def B(self, u, v) -> ExactScalar:
        return ExactScalar(self.field, self.bilinear(u, v), 2)

    def simple_root(self, s: int):
        F = self.field
        return tuple(F.one if t == s else F.zero for t in range(self.rank))

    def reflect_vector(self, s: int, v):
        """Apply the simple reflection s to a root-space vector."""
        F = self.field
        acc = v[s]
        for t in range(self.rank):
            if t == s:
                acc = F.sub(acc, F.scale(v[s], 2))
                continue
            k = self._A_int[s][t]
            if k is None:
                acc = F.sub(acc, F.mul(self.A[s][t], v[t]))
            elif k:
                acc = F.sub(acc, F.scale(v[t], k))
        out = list(v)
        out[s] = acc
        return tuple(out)

    def reflect_dual(self, s: int, x):
        """Apply s to a point of the dual space (coordinates x_t = <x, e_t>)."""
        F = self.field
        xs = x[s]
        if not any(xs):
            return tuple(x)
        out = []
        for t in range(self.rank):
            if t == s:
                out.append(F.neg(xs))
                continue
            k = self._A_int[s][t]
            if k is None:
                out.append(F.sub(x[t], F.mul(xs, self.A[s][t])))
            elif k:
                out.append(F.sub(x[t], F.scale(xs, k)))
            else:
                out.append(x[t])
        return tuple(out)

    def vector_sign(self, v) -> int:
        """+1 if v is a nonzero nonnegative vector, -1 if nonpositive, 0 otherwise."""
        F = self.field
        signs = {F.sign(x) for x in v}
        signs.discard(0)
        if signs == {1}:
            return 1
        if signs == {-1}:
            return -1
        return 0

    def element(self, word: Iterable[int]) -> "GroupElement":
        g = self.identity
        for s in word:
            g = g.right_mul(s)
        return g


def _identity_matrix(F, n):
    return tuple(tuple(F.one if i == j else F.zero for j in range(n)) for i in range(n))


class GroupElement:
    """An element of W, stored as its matrix on root space and that of its inverse."""

    __slots__ = ("ctype", "mat", "inv", "_word", "_hash", "__weakref__")

    def __init__(self, ctype: CoxeterType, mat, inv, word=None):
        self.ctype = ctype
        self.mat = mat
        self.inv = inv
        self._word = word
        self._hash = None

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.ctype == other.ctype and self.mat == other.mat

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.mat)
        return self._hash

    def __repr__(self):
        return f"GroupElement({self.word_str()})"

    def word_str(self) -> str:
        return "".join("rst"[s] if self.ctype.rank == 3 else "st"[s] for s in self.word) or "1"

    def column(self, s: int):
        """Image w(e_s)."""
        return tuple(row[s] for row in self.mat)

    def inverse_column(self, s: int):
        return tuple(row[s] for row in self.inv)

    def apply(self, v):
        F = self.ctype.field
        return tuple(F.dot(row, v) for row in self.mat)

    def apply_inverse(self, v):
        F = self.ctype.field
        return tuple(F.dot(row, v) for row in self.inv)

    def left_mul(self, s: int) -> "GroupElement":
        """The element s*w."""
        ct = self.ctype
        cols = [ct.reflect_vector(s, self.column(j)) for j in range(ct.rank)]
        mat = tuple(tuple(cols[j][i] for j in range(ct.rank)) for i in range(ct.rank))
        # (s w)^-1 = w^-1 s: column u of the product is w^-1(s e_u)
        inv = _right_reflect(ct, self.inv, s)
        return GroupElement(ct, mat, inv)

    def right_mul(self, s: int) -> "GroupElement":
        """The element w*s."""
        ct = self.ctype
        mat = _right_reflect(ct, self.mat, s)
        cols = [ct.reflect_vector(s, self.inverse_column(j)) for j in range(ct.rank)]
        inv = tuple(tuple(cols[j][i] for j in range(ct.rank)) for i in range(ct.rank))
        return GroupElement(ct, mat, inv)

    def inverse(self) -> "GroupElement":
        return GroupElement(self.ctype, self.inv, self.mat, None)

    def left_descents(self) -> frozenset:
        ct = self.ctype
        return frozenset(s for s in ct.generators if ct.vector_sign(self.inverse_column(s)) < 0)

    def right_descents(self) -> frozenset:
        ct = self.ctype
        return frozenset(s for s in ct.generators if ct.vector_sign(self.column(s)) < 0)

    @property
    def word(self) -> tuple:
        """ShortLex reduced word: repeatedly strip the smallest left descent."""
        if self._word is None:
            out = []
            g = self
            while True:
                d = g.left_descents()
                if not d:
                    break
                s = min(d)
                out.append(s)
                g = g.left_mul(s)
            self._word = tuple(out)
        return self._word

    @property
    def length(self) -> int:
        return len(self.word)

    def is_identity(self) -> bool:
        return self.mat == self.ctype.identity.mat

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)


def _right_reflect(ct: CoxeterType, M, s: int):
    """Matrix M*s: column u becomes col_u - A[s][u] col_s."""
    F = ct.field
    n = ct.rank
    cs = [M[i][s] for i in range(n)]
    rows = []
    for i in range(n):
        row = []
        for u in range(n):
            if u == s:
                row.append(F.neg(cs[i]))
                continue
            k = ct._A_int[s][u]
            if k is None:
                row.append(F.sub(M[i][u], F.mul(ct.A[s][u], cs[i])))
            elif k:
                row.append(F.sub(M[i][u], F.scale(cs[i], k)))
            else:
                row.append(M[i][u])
        rows.append(tuple(row))
    return tuple(rows)


def _matmul(F, X, Y):
    n = len(X)
    cols = [tuple(Y[k][j] for k in range(n)) for j in range(n)]
    return tuple(tuple(F.dot(X[i], cols[j]) for j in range(n)) for i in range(n))


def multiply(u: GroupElement, v: GroupElement) -> GroupElement:
    """Product uv; the reduced word is recomputed lazily from the matrix."""
    if u.ctype != v.ctype:
        raise TypeError("elements of different Coxeter types")
    F = u.ctype.field
    return GroupElement(u.ctype, _matmul(F, u.mat, v.mat), _matmul(F, v.inv, u.inv))


def left_descents(w: GroupElement) -> frozenset:
    return w.left_descents()


def right_descents(w: GroupElement) -> frozenset:
    return w.right_descents()


def distance(x: GroupElement, y: GroupElement) -> int:
    """Gallery distance l(x^-1 y)."""
    return multiply(x.inverse(), y).length


@dataclass(frozen=True)
class Residue:
    """The coset c<J>, with J a set of generator indices."""

    chamber: GroupElement
    J: frozenset

    def __post_init__(self):
        object.__setattr__(self, "J", frozenset(self.J))

    @property
    def rank(self) -> int:
        return len(self.J)

    def __contains__(self, x: GroupElement) -> bool:
        # x in c<J> iff c^-1 x lies in the parabolic W_J, i.e. its reduced word uses only J
        return set(multiply(self.chamber.inverse(), x).word) <= self.J

    def chambers(self) -> list:
        """All chambers of the residue (finite for 2-spherical types with |J| <= 2)."""
        if len(self.J) == self.chamber.ctype.rank and not self.chamber.ctype.is_spherical:
            raise ValueError("residue of full rank is infinite")
        seen = {self.chamber}
        order = [self.chamber]
        queue = deque([self.chamber])
        while queue:
            g = queue.popleft()
            for s in sorted(self.J):
                h = g.right_mul(s)
                if h not in seen:
                    seen.add(h)
                    order.append(h)
                    queue.append(h)
        return order

    def __eq__(self, other):
        return isinstance(other, Residue) and self.J == other.J and self.chamber in other

    def __hash__(self):
        return hash((self.J, projection(self.chamber.ctype.identity, self).mat))


def projection(x: GroupElement, R: Residue) -> GroupElement:
    """The gate of x in R: the unique chamber of R closest to x.

    With y = c^-1 x we strip left descents lying in J; the stripped prefix u
    is the element of W_J with u^-1 y of minimal length, and the gate is c*u.
    """
    ct = x.ctype
    y = multiply(R.chamber.inverse(), x)
    u = ct.identity
    while True:
        d = sorted(y.left_descents() & R.J)
        if not d:
            break
        s = d[0]
        y = y.left_mul(s)
        u = u.right_mul(s)
    return multiply(R.chamber, u)


def minimal_gallery(x: GroupElement, y: GroupElement) -> list:
    """Gallery x = g_0, ..., g_n = y along the ShortLex word of x^-1 y."""
    w = multiply(x.inverse(), y)
    out = [x]
    g = x
    for s in w.word:
        g = g.right_mul(s)
        out.append(g)
    return out


def enumerate_elements(ctype: CoxeterType, depth: int = DEFAULT_DEPTH) -> list:
    """All elements of length <= depth, in BFS (then ShortLex) order.

    Elements are deduplicated by matrix; the reduced word of each is the
    ShortLex-minimal word found by extending shorter words on the left.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    layer = [ctype.identity]
    seen = {ctype.identity}
    out = [ctype.identity]
    for n in range(1, depth + 1):
        nxt = {}
        for g in layer:
            for s in ctype.generators:
                h = g.left_mul(s)
                if h in seen:
                    continue
                word = (s,) + g.word
                prev = nxt.get(h)
                if prev is None or word < prev._word:
                    h._word = word
                    nxt[h] = h
        layer = sorted(nxt.values(), key=lambda g: g._word)
        seen.update(layer)
        out.extend(layer)
    return out


def iter_layers(ctype: CoxeterType, depth: int) -> Iterator[list]:
    """Yield the spheres of radius 0..depth."""
    elems = enumerate_elements(ctype, depth)
    current = []
    n = 0
    for g in elems:
        if g.length != n:
            yield current
            current = []
            n = g.length
        current.append(g)
    yield current
