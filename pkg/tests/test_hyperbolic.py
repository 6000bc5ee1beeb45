from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nestedroots.coxeter import CoxeterType, enumerate_elements
from nestedroots.hyperbolic import (
    ADMITTED_ANGLES,
    DirectedAngle,
    GeometryError,
    directed_angle,
    fold_point,
    future_vector,
    residue_type_m,
    rotation_order,
    undirected_angle,
    vertex_residue,
    wall_point,
)
from nestedroots.roots import PairKind, classify_pair, enumerate_roots, positive_roots, simple_roots

from oracles import element_order

HYPERBOLIC = [(2, 3, 8), (2, 4, 6), (3, 3, 4), (2, 6, 8)]


def _finite_pairs(ct, depth):
    roots = positive_roots(ct, depth)
    for i, a in enumerate(roots):
        for b in roots[i + 1 :]:
            if classify_pair(a, b).kind is PairKind.FINITE:
                yield a, b


def test_directed_angle_reduces():
    assert DirectedAngle(2, 8) == DirectedAngle(1, 4)
    assert str(DirectedAngle(6, 8)) == "3/4"
    assert DirectedAngle(1, 4).complement() == DirectedAngle(3, 4)


@pytest.mark.parametrize("labels", HYPERBOLIC)
def test_simple_pair_angles(labels):
    ct = CoxeterType(labels)
    roots = simple_roots(ct)
    for s in ct.generators:
        for t in ct.generators:
            if s >= t:
                continue
            m = ct.m[s][t]
            a, b = roots[s].vec, roots[t].vec
            assert undirected_angle(ct, a, b) == Fraction(m - 1, m)
            got = {directed_angle(ct, a, b).value, directed_angle(ct, b, a).value}
            assert got == {Fraction(1, m), Fraction(m - 1, m)}
            assert residue_type_m(ct, a, b) == m
            assert rotation_order(ct, a, b) == m


@pytest.mark.parametrize("labels", [(2, 3, 8), (2, 4, 6)])
def test_angles_admitted_and_sum_to_pi(labels):
    ct = CoxeterType(labels)
    n = 0
    for a, b in _finite_pairs(ct, 5):
        d1 = directed_angle(ct, a.vec, b.vec)
        d2 = directed_angle(ct, b.vec, a.vec)
        assert d1.value in ADMITTED_ANGLES and d2.value in ADMITTED_ANGLES
        assert d1.value + d2.value == 1
        assert d1.complement() == d2
        n += 1
    assert n > 100


@pytest.mark.parametrize("labels", [(2, 3, 8), (3, 3, 4)])
def test_order_divides_residue_label(labels):
    ct = CoxeterType(labels)
    for a, b in _finite_pairs(ct, 4):
        o = element_order(a.reflection() * b.reflection())
        assert o == rotation_order(ct, a.vec, b.vec)
        assert residue_type_m(ct, a.vec, b.vec) % o == 0


@pytest.mark.parametrize("labels", [(2, 3, 8), (2, 4, 6), (3, 3, 4)])
def test_conjugated_simple_pairs_keep_their_label(labels):
    ct = CoxeterType(labels)
    for w in enumerate_elements(ct, 5):
        for s in ct.generators:
            for t in ct.generators:
                if s < t:
                    assert residue_type_m(ct, w.column(s), w.column(t)) == ct.m[s][t]


def test_vertex_residue_contains_the_chamber():
    ct = CoxeterType((2, 3, 8))
    for w in enumerate_elements(ct, 4):
        R, J = vertex_residue(ct, w.column(1), w.column(2))
        assert J == {1, 2}
        assert w in R


_EVEN = [w for w in enumerate_elements(CoxeterType((2, 4, 6)), 6) if w.length % 2 == 0]
_PAIRS = list(_finite_pairs(CoxeterType((2, 4, 6)), 4))


@settings(max_examples=60)
@given(st.sampled_from(_EVEN), st.sampled_from(_PAIRS))
def test_directed_angle_invariant_under_rotations(w, pair):
    ct = w.ctype
    a, b = pair
    wa, wb = a.translate(w), b.translate(w)
    assert directed_angle(ct, wa.vec, wb.vec) == directed_angle(ct, a.vec, b.vec)
    assert residue_type_m(ct, wa.vec, wb.vec) == residue_type_m(ct, a.vec, b.vec)


@settings(max_examples=30)
@given(st.sampled_from([w for w in enumerate_elements(CoxeterType((2, 4, 6)), 5) if w.length % 2]))
def test_reflections_reverse_directed_angles(w):
    ct = w.ctype
    a, b = _PAIRS[0]
    d = directed_angle(ct, a.vec, b.vec)
    assert directed_angle(ct, a.translate(w).vec, b.translate(w).vec) == d.complement()


def test_wall_point_lies_on_both_walls():
    ct = CoxeterType((2, 3, 8))
    F = ct.field
    z = future_vector(ct)
    for a, b in _finite_pairs(ct, 3):
        p = wall_point(ct, a.vec, b.vec)
        assert F.dot(p, a.vec) == F.zero and F.dot(p, b.vec) == F.zero
        assert F.sign(F.dot(p, z)) > 0


def test_fold_point_lands_in_closed_chamber():
    ct = CoxeterType((2, 4, 6))
    F = ct.field
    for a, b in _finite_pairs(ct, 3):
        p = wall_point(ct, a.vec, b.vec)
        word, y = fold_point(ct, p)
        assert all(F.sign(x) >= 0 for x in y)
        # unfolding returns the original point
        for s in reversed(word):
            y = ct.reflect_dual(s, y)
        assert y == p


@pytest.mark.parametrize("labels", [(2, 4, 4), (3, 3, 3), (2, 3, 6)])
def test_affine_vertices(labels):
    ct = CoxeterType(labels)
    for a, b in _finite_pairs(ct, 4):
        m = residue_type_m(ct, a.vec, b.vec)
        assert m in labels
        assert m % rotation_order(ct, a.vec, b.vec) == 0


def test_parallel_walls_raise():
    ct = CoxeterType((2, 4, 4))
    a = simple_roots(ct)[0]
    others = [b for b in enumerate_roots(ct, 3) if classify_pair(a, b).kind is PairKind.NESTED]
    assert others
    for f in (wall_point, directed_angle, residue_type_m, undirected_angle):
        with pytest.raises(GeometryError):
            f(ct, a.vec, others[0].vec)


def test_ultraparallel_walls_raise():
    ct = CoxeterType((2, 3, 8))
    a = simple_roots(ct)[0]
    far = [b for b in enumerate_roots(ct, 3) if classify_pair(a, b).kind is PairKind.NON_PRENILPOTENT]
    assert far
    for f in (wall_point, directed_angle, residue_type_m):
        with pytest.raises(GeometryError):
            f(ct, a.vec, far[0].vec)


def test_equal_walls_raise():
    ct = CoxeterType((2, 3, 8))
    a = simple_roots(ct)[1]
    with pytest.raises(GeometryError):
        directed_angle(ct, a.vec, (-a).vec)
    with pytest.raises(GeometryError):
        rotation_order(ct, a.vec, a.vec)


def test_future_vector_rank_two():
    with pytest.raises(GeometryError):
        future_vector(CoxeterType((8,)))
