"""Reflection triangles and bounded-depth scans of the triangle lemmas.

Three walls that pairwise meet in single points, and not all in one point,
cut the plane into seven regions.  Only the bounded one can have all three
pairwise cones of angle pi/o (an unbounded region has at least two
supplementary cone angles, which would push the angle sum to pi), so each
such triple of walls yields at most one combinatorial triangle: the roots
containing the opposite vertices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from nestedroots import kernels
from nestedroots.coxeter import CoxeterType, GroupElement, Residue, multiply
from nestedroots.hyperbolic import (
    fold_point,
    residue_type_m,
    rotation_order,
    undirected_angle,
    vertex_residue,
    wall_point,
)
from nestedroots.roots import Root, interval_open, positive_roots, root_origin

__all__ = [
    "Triangle",
    "bounded_triangle",
    "is_reflection_triangle",
    "is_combinatorial",
    "is_fundamental",
    "unique_chamber",
    "triangle_vertices",
    "enumerate_triangles",
    "scan_lemmas",
    "LEMMAS",
    "CT2_TEST",
    "ScanReport",
]

# CT2 is decided exactly by the cone angle, not by sampling chambers
CT2_TEST = "cone angle = pi/o(r_i r_j)"

LEMMAS = ("complete-fundamental", "unique-chamber", "angle-half", "prop-238", "aux-238")


def _meets(ct: CoxeterType, a, b) -> bool:
    """Walls of a and b meet in a single point (|B| < 1)."""
    F = ct.field
    val = ct.bilinear(a, b)
    two = F.from_int(2)
    return F.sign(F.sub(val, two)) < 0 < F.sign(F.add(val, two))


def _det(ct, a, b, c):
    return kernels.det3(a, b, c, ct.field.reduction)


@dataclass(frozen=True)
class Triangle:
    """Three roots; the region is the intersection of the three half-spaces."""

    roots: tuple

    @property
    def ctype(self) -> CoxeterType:
        return self.roots[0].ctype

    def __iter__(self):
        return iter(self.roots)

    def key(self):
        return tuple(sorted(r.vec for r in self.roots))

    def translate(self, w: GroupElement) -> "Triangle":
        return Triangle(tuple(r.translate(w) for r in self.roots))

    def cone_angle(self, i: int, j: int) -> Fraction:
        """Angle of the cone a_i n a_j, as a fraction of pi."""
        return 1 - undirected_angle(self.ctype, self.roots[i].vec, self.roots[j].vec)

    def interior_angles(self) -> tuple:
        return (self.cone_angle(0, 1), self.cone_angle(0, 2), self.cone_angle(1, 2))

    def order(self, i: int, j: int) -> int:
        return rotation_order(self.ctype, self.roots[i].vec, self.roots[j].vec)

    def m(self, i: int, j: int) -> int:
        return residue_type_m(self.ctype, self.roots[i].vec, self.roots[j].vec)

    def open_interval(self, i: int, j: int) -> list:
        """(-a_i, a_j): walls through the vertex a_i n a_j that cut the cone."""
        return interval_open(-self.roots[i], self.roots[j])


def is_reflection_triangle(roots: Iterable[Root]) -> bool:
    """Pairwise meeting walls, not all through a common point (CT1)."""
    a, b, c = roots
    ct = a.ctype
    if not (_meets(ct, a.vec, b.vec) and _meets(ct, a.vec, c.vec) and _meets(ct, b.vec, c.vec)):
        return False
    return any(_det(ct, a.vec, b.vec, c.vec))


def bounded_triangle(a: Root, b: Root, c: Root) -> Triangle | None:
    """Orient three walls towards their bounded region, if they form a reflection triangle."""
    if not is_reflection_triangle((a, b, c)):
        return None
    ct = a.ctype
    F = ct.field
    vs = (a.vec, b.vec, c.vec)
    out = []
    for i in range(3):
        j, k = [x for x in range(3) if x != i]
        # the root must contain the vertex where the other two walls meet
        p = wall_point(ct, vs[j], vs[k])
        sg = F.sign(F.dot(p, vs[i]))
        r = Root(ct, vs[i]) if sg > 0 else Root(ct, tuple(F.neg(x) for x in vs[i]))
        out.append(r)
    return Triangle(tuple(out))


def is_combinatorial(T: Triangle) -> bool:
    """CT1 plus CT2: every pairwise cone has angle pi/o(r_i r_j)."""
    if not is_reflection_triangle(T.roots):
        return False
    for i, j in ((0, 1), (0, 2), (1, 2)):
        if T.cone_angle(i, j) != Fraction(1, T.order(i, j)):
            return False
    return True


def is_fundamental(T: Triangle) -> bool:
    """(-a_i, a_j) empty at every vertex."""
    return all(not T.open_interval(i, j) for i, j in ((0, 1), (1, 2), (2, 0)))


def _interior_point(T: Triangle, weights=(1, 1, 1)):
    ct = T.ctype
    F = ct.field
    vs = [r.vec for r in T.roots]
    pts = [wall_point(ct, vs[j], vs[k]) for j, k in ((1, 2), (0, 2), (0, 1))]
    x = [F.zero] * 3
    for wgt, p in zip(weights, pts):
        x = [F.add(u, F.scale(v, wgt)) for u, v in zip(x, p)]
    return tuple(x)


def unique_chamber(T: Triangle) -> GroupElement | None:
    """The chamber w if the region of T is exactly one chamber, else None.

    A generic interior point is folded into the fundamental chamber; the
    triangle is that single chamber iff its walls are the walls of w.
    """
    ct = T.ctype
    F = ct.field
    for weights in ((1, 1, 1), (1, 2, 3), (2, 3, 5), (3, 5, 7), (5, 7, 11)):
        x = _interior_point(T, weights)
        word, y = fold_point(ct, x)
        if all(F.sign(c) > 0 for c in y):
            break
    else:  # pragma: no cover - every weight triple lying on a wall is impossible
        raise RuntimeError("could not find a generic interior point")
    w = ct.element(word)
    chamber_walls = {Root(ct, w.column(s)).wall() for s in ct.generators}
    if chamber_walls == {r.wall() for r in T.roots}:
        return w
    return None


def angle_sum_matches_chamber(T: Triangle) -> bool:
    """Area check: the angle sum equals that of a single chamber."""
    return sum(T.interior_angles()) == T.ctype.reciprocal_sum


def triangle_vertices(T: Triangle) -> list:
    """For each i, the rank-2 residue fixed by the other two reflections."""
    ct = T.ctype
    out = []
    for i in range(3):
        j, k = [x for x in range(3) if x != i]
        R, _ = vertex_residue(ct, T.roots[j].vec, T.roots[k].vec)
        out.append(R)
    return out


def enumerate_triangles(ctype: CoxeterType, depth: int, combinatorial_only: bool = True) -> list:
    """Triangles whose walls come from roots of depth <= depth, in a fixed order."""
    walls = positive_roots(ctype, depth)
    n = len(walls)
    meets = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            meets[i][j] = meets[j][i] = _meets(ctype, walls[i].vec, walls[j].vec)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            if not meets[i][j]:
                continue
            for k in range(j + 1, n):
                if not (meets[i][k] and meets[j][k]):
                    continue
                T = bounded_triangle(walls[i], walls[j], walls[k])
                if T is None:
                    continue
                if combinatorial_only and not is_combinatorial(T):
                    continue
                out.append(T)
    return out


@dataclass
class LemmaResult:
    lemma: str
    applicable: bool
    checked: int = 0
    configurations: int = 0
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def status(self) -> str:
        if not self.applicable:
            return "skipped"
        return "pass" if not self.violations else "fail"

    def as_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "status": self.status,
            "triangles_checked": self.checked,
            "configurations": self.configurations,
            "violations": len(self.violations),
            "violation_examples": self.violations[:5],
            "notes": self.notes,
        }


@dataclass
class ScanReport:
    ctype: CoxeterType
    depth: int
    walls: int
    triangles: int
    combinatorial: int
    results: dict

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.results.values())

    def as_dict(self) -> dict:
        return {
            "type": str(self.ctype),
            "depth": self.depth,
            "walls": self.walls,
            "reflection_triangles": self.triangles,
            "combinatorial_triangles": self.combinatorial,
            "ct2_test": CT2_TEST,
            "lemmas": {k: v.as_dict() for k, v in self.results.items()},
        }


def _describe(T: Triangle, *extra) -> dict:
    return {"roots": [list(r.float_vec()) for r in T.roots], "detail": [str(x) for x in extra]}


def _check_complete_fundamental(ct, tris, res: LemmaResult):
    for T in tris:
        res.checked += 1
        res.configurations += 1
        if not is_fundamental(T):
            res.violations.append(_describe(T, "not fundamental"))


def _check_unique_chamber(ct, tris, res: LemmaResult):
    for T in tris:
        res.checked += 1
        res.configurations += 1
        w = unique_chamber(T)
        area = angle_sum_matches_chamber(T)
        if w is None or not area:
            res.violations.append(_describe(T, f"chamber={w}", f"angle_sum_match={area}"))
        elif not all(r.contains(w) for r in T.roots):
            res.violations.append(_describe(T, "chamber not inside all three roots"))


_PERMS = tuple(itertools.permutations(range(3)))


def _check_angle_half(ct, tris, res: LemmaResult, strict_half: bool):
    F = ct.field
    for T in tris:
        res.checked += 1
        for i, j, k in _PERMS:
            mid = T.open_interval(i, j)
            for a3 in mid:
                res.configurations += 1
                theta = undirected_angle(ct, a3.vec, T.roots[k].vec)
                if theta in (Fraction(3, 8), Fraction(5, 8)):
                    res.violations.append(_describe(T, (i, j, k), f"angle 5/8 between r_k and r_3"))
                if not strict_half:
                    continue
                if any(ct.bilinear(a3.vec, T.roots[k].vec)):
                    res.violations.append(_describe(T, (i, j, k), f"B(v3, vk) != 0, angle {theta}"))
                if T.open_interval(i, k) or T.open_interval(j, k):
                    res.violations.append(_describe(T, (i, j, k), "(-a_i,a_k) or (-a_j,a_k) nonempty"))
                if len(mid) != 1:
                    res.violations.append(_describe(T, (i, j, k), f"|(-a_i,a_j)| = {len(mid)}"))


def _check_prop_238(ct, tris, res: LemmaResult):
    for T in tris:
        res.checked += 1
        for i, j, k in _PERMS:
            mid = T.open_interval(i, j)
            for a3 in mid:
                sub = bounded_triangle(T.roots[j], T.roots[k], a3)
                if sub is None:
                    continue
                # interior angle of the sub-triangle at the meeting point of r_k and r_3
                if sub.cone_angle(1, 2) != Fraction(2, 3):
                    continue
                res.configurations += 1
                problems = []
                if T.open_interval(j, k):
                    problems.append("(-a_j,a_k) nonempty")
                if T.open_interval(i, k):
                    problems.append("(-a_i,a_k) nonempty")
                if len(mid) > 3:
                    problems.append(f"|(-a_i,a_j)| = {len(mid)}")
                m = T.m(i, j)
                if m != 8:
                    problems.append(f"m = {m}")
                if problems:
                    res.violations.append(_describe(T, (i, j, k), *problems))


def _m3_partner(ct: CoxeterType, root: Root):
    """A root b meeting a at a vertex of type {u, v} with m_uv = 3, if a = w(e_u) allows one."""
    w, u = root_origin(root)
    for v in ct.generators:
        if v != u and ct.m[u][v] == 3:
            return Root(ct, w.column(v))
    return None


def _aux_outcome_a(ct, T: Triangle, i: int, j: int) -> bool:
    if len(T.open_interval(i, j)) != 1:
        return False
    ri = T.roots[i]
    beta = _m3_partner(ct, ri)
    return beta is not None and _meets(ct, ri.vec, beta.vec) and residue_type_m(ct, ri.vec, beta.vec) == 3


def _check_aux_238(ct, tris, res: LemmaResult):
    for T in tris:
        res.checked += 1
        if any(T.m(a, b) != 8 for a, b in ((0, 1), (0, 2), (1, 2))):
            continue
        for i, j, k in _PERMS:
            if T.open_interval(i, k) or T.open_interval(j, k):
                continue
            res.configurations += 1
            case_b = not any(ct.bilinear(T.roots[i].vec, T.roots[j].vec))
            if not (case_b or _aux_outcome_a(ct, T, i, j)):
                res.violations.append(_describe(T, (i, j, k), "neither outcome holds"))


def scan_lemmas(ctype: CoxeterType, depth: int, lemmas: Iterable[str] = LEMMAS) -> ScanReport:
    """Enumerate combinatorial triangles at the given depth and check each lemma.

    Lemmas that do not apply to the type are reported as skipped.
    """
    if ctype.rank != 3 or ctype.is_spherical:
        raise ValueError("triangle scans need a non-spherical rank 3 type")
    walls = positive_roots(ctype, depth)
    all_tris = enumerate_triangles(ctype, depth, combinatorial_only=False)
    tris = [T for T in all_tris if is_combinatorial(T)]
    is_238 = sorted(ctype.labels) == [2, 3, 8]
    results = {}
    for name in lemmas:
        if name == "complete-fundamental":
            res = LemmaResult(name, ctype.is_complete_graph)
            if res.applicable:
                _check_complete_fundamental(ctype, tris, res)
        elif name == "unique-chamber":
            res = LemmaResult(name, ctype.is_cyclic and ctype.is_hyperbolic)
            if res.applicable:
                _check_unique_chamber(ctype, tris, res)
        elif name == "angle-half":
            res = LemmaResult(name, True)
            _check_angle_half(ctype, tris, res, strict_half=not is_238)
            if is_238:
                res.notes.append("type (2,3,8): only the 5/8 exclusion applies")
        elif name == "prop-238":
            res = LemmaResult(name, is_238)
            if res.applicable:
                _check_prop_238(ctype, tris, res)
        elif name == "aux-238":
            res = LemmaResult(name, is_238)
            if res.applicable:
                _check_aux_238(ctype, tris, res)
        else:
            raise ValueError(f"unknown lemma {name!r}; expected one of {LEMMAS}")
        if not res.applicable:
            res.notes.append(f"not applicable to type ({ctype})")
        results[name] = res
    return ScanReport(ctype, depth, len(walls), len(all_tris), len(tris), results)
