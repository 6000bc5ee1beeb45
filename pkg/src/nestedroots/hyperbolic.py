"""Wall intersection points, residue types and directed angles.

A point of the dual space V* is stored by its coordinates x_t = <x, e_t>.
The intersection point of the walls of two roots is the cross product
v_a x v_b, which pairs to zero with both root vectors.  Its sign is fixed by
requiring <p, z> > 0 for a fixed vector z of the imaginary cone (positive
coordinates and A z <= 0); in the hyperbolic case this puts p in the
future light cone, and <x, z> serves as a height that strictly drops under
every folding step.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from nestedroots import kernels
from nestedroots.coxeter import CoxeterType, GroupElement, Residue

__all__ = [
    "DirectedAngle",
    "GeometryError",
    "future_vector",
    "wall_point",
    "fold_point",
    "vertex_residue",
    "residue_type_m",
    "undirected_angle",
    "directed_angle",
    "rotation_order",
    "ADMITTED_ANGLES",
]

ADMITTED_ANGLES = frozenset(Fraction(k, m) for m in (2, 3, 4, 6, 8) for k in range(1, m))


class GeometryError(ValueError):
    """Raised when two walls do not meet or a fold misbehaves."""


@dataclass(frozen=True, order=True)
class DirectedAngle:
    """The angle k*pi/m, stored reduced."""

    k: int
    m: int

    def __post_init__(self):
        g = gcd(self.k, self.m)
        if g > 1:
            object.__setattr__(self, "k", self.k // g)
            object.__setattr__(self, "m", self.m // g)

    @property
    def value(self) -> Fraction:
        return Fraction(self.k, self.m)

    def complement(self) -> "DirectedAngle":
        return DirectedAngle(self.m - self.k, self.m)

    def __str__(self):
        return f"{self.k}/{self.m}"


@lru_cache(maxsize=None)
def future_vector(ctype: CoxeterType):
    """z = +-adj(A)(1,...,1) with positive coordinates, or raise.

    Then A z = det(A) (1,...,1) <= 0 for non-spherical types, so z lies in
    the imaginary cone and pairs positively with the whole Tits cone.
    """
    if ctype.rank != 3:
        raise GeometryError("future vector only defined in rank 3")
    F = ctype.field
    A = ctype.A
    one = (F.one,) * 3
    cols = [tuple(A[i][j] for i in range(3)) for j in range(3)]
    # adj(A) * 1 = sum of the cross products of pairs of columns
    z = [F.zero] * 3
    for a, b in ((1, 2), (2, 0), (0, 1)):
        cr = kernels.cross3(cols[a], cols[b], F.reduction)
        z = [F.add(x, y) for x, y in zip(z, cr)]
    z = tuple(z)
    sg = ctype.vector_sign(z)
    if sg == 0 or any(not any(x) for x in z):
        raise GeometryError(f"no strictly positive future vector for {ctype}")
    if sg < 0:
        z = tuple(F.neg(x) for x in z)
    return z


def pairing(ctype: CoxeterType, x, v):
    return ctype.field.dot(x, v)


def _require_meeting(ctype: CoxeterType, va, vb):
    # doubled form: the walls meet in a point of the disc iff |B| < 2
    F = ctype.field
    val = ctype.bilinear(va, vb)
    two = F.from_int(2)
    if not F.sign(F.sub(val, two)) < 0 < F.sign(F.add(val, two)):
        raise GeometryError("walls do not meet in a single point")


def wall_point(ctype: CoxeterType, va, vb):
    """Intersection point of two walls in V*, normalized to the future side."""
    _require_meeting(ctype, va, vb)
    F = ctype.field
    p = kernels.cross3(va, vb, F.reduction)
    if all(not any(x) for x in p):
        raise GeometryError("walls coincide")
    z = future_vector(ctype)
    sg = F.sign(F.dot(p, z))
    if sg == 0:
        raise GeometryError("intersection point lies on the boundary")
    if sg < 0:
        p = tuple(F.neg(x) for x in p)
    return p


def fold_point(ctype: CoxeterType, x, max_steps: int = 10_000):
    """Fold x into the closed fundamental chamber.

    Returns (word, y) with x = s_1 ... s_k (y).  Each step reflects in the
    smallest s with x_s < 0.
    """
    F = ctype.field
    word = []
    for _ in range(max_steps):
        neg = [s for s in ctype.generators if F.sign(x[s]) < 0]
        if not neg:
            return tuple(word), x
        s = neg[0]
        x = ctype.reflect_dual(s, x)
        word.append(s)
    raise GeometryError("fold did not terminate")


def vertex_residue(ctype: CoxeterType, va, vb):
    """The rank-2 residue whose stabilizer contains both reflections.

    Returns (residue, folded vertex type {s, t}).
    """
    p = wall_point(ctype, va, vb)
    word, y = fold_point(ctype, p)
    F = ctype.field
    positive = [s for s in ctype.generators if F.sign(y[s]) > 0]
    if len(positive) != 1:
        raise GeometryError("wall intersection did not fold onto a vertex")
    J = frozenset(ctype.generators) - {positive[0]}
    w = ctype.element(word)
    return Residue(w, J), J


def residue_type_m(ctype: CoxeterType, va, vb) -> int:
    """m_{a,b}: the label of the rank-2 residue at the intersection of the walls."""
    if ctype.rank == 2:
        return ctype.labels[0]
    _, J = vertex_residue(ctype, va, vb)
    s, t = sorted(J)
    return ctype.m[s][t]


def undirected_angle(ctype: CoxeterType, va, vb) -> Fraction:
    """theta/pi with cos(theta) = B(v_a, v_b), recognized exactly."""
    _require_meeting(ctype, va, vb)
    F = ctype.field
    k = F.recognize_double_cos(ctype.bilinear(va, vb))
    if k > F.L:
        k = 2 * F.L - k
    return Fraction(k, F.L)


def directed_angle(ctype: CoxeterType, va, vb) -> DirectedAngle:
    """The directed angle from the wall of a to the wall of b.

    The orientation is the sign of det(z, v_a, v_b); it is invariant under
    orientation preserving elements, so the result only depends on the
    pair up to such motions.  Only convention-free consequences (the sum
    with the reversed angle, unordered pairs) are meaningful.
    """
    F = ctype.field
    theta = undirected_angle(ctype, va, vb)
    if theta == 0 or theta == 1:
        raise GeometryError("walls are equal, not intersecting")
    orient = F.sign(kernels.det3(future_vector(ctype), va, vb, F.reduction))
    if orient == 0:
        raise GeometryError("degenerate orientation")
    val = theta if orient > 0 else 1 - theta
    return DirectedAngle(val.numerator, val.denominator)


def rotation_order(ctype: CoxeterType, va, vb) -> int:
    """Order of r_a r_b for a pair whose walls meet at angle k*pi/L."""
    theta = undirected_angle(ctype, va, vb)
    if theta == 0 or theta == 1:
        raise GeometryError("equal walls")
    return theta.denominator
