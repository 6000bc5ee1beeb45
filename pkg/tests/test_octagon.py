import itertools
import random

import pytest

from nestedroots.algebra.fields import BiPolynomialRing, PrimeField, f2_identity, f4_square, f8_t4
from nestedroots.polygon.octagon import (
    OctagonElement,
    OctagonEngine,
    SigmaError,
    even_inv,
    even_mul,
    octagon_commutator,
    octagon_commutator_closed,
    octagon_product_closed,
    octagon_product_formula,
)
from nestedroots.polygon.relations import OCTAGON_ORDER

F8 = f8_t4()
F2 = f2_identity()
E8 = OctagonEngine(F8)
E2 = OctagonEngine(F2)


def test_collect_commuting_generator():
    g = E8.element(a2=3, b2=5, a7=6)
    h = E8.collect(g, "x4", 7)
    assert h == g._replace(a4=F8.add(g.a4, 7))


def test_collect_y2_rule():
    assert E8.collect(E8.identity, "y2", 3) == E8.element(b2=3)
    g = E8.element(b2=1)
    # y2(1) y2(z) = x2(1^sigma z) y2(1 + z)
    assert E8.collect(g, "y2", 6) == E8.element(a2=6, b2=F8.add(1, 6))


def test_collect_rejects_foreign_generator():
    with pytest.raises(ValueError):
        E8.collect(E8.identity, "x8", 1)
    with pytest.raises(ValueError):
        E8.collect_word([("x1", 1)])


@pytest.mark.parametrize("F", [F2, F8], ids=["F2", "F8"])
def test_even_law_group_axioms(F):
    pairs = list(itertools.product(F.elements(), repeat=2))
    e = (F.zero, F.zero)
    for p in pairs:
        assert even_mul(F, p, e) == p == even_mul(F, e, p)
        assert even_mul(F, p, even_inv(F, p)) == e
        assert even_mul(F, even_inv(F, p), p) == e
    for p, q, r in itertools.product(pairs, repeat=3):
        assert even_mul(F, even_mul(F, p, q), r) == even_mul(F, p, even_mul(F, q, r))


def _random_word(rng, n):
    gens = OCTAGON_ORDER + ("y6inv",)
    return [(rng.choice(gens), rng.randrange(8)) for _ in range(n)]


def test_collection_confluence():
    rng = random.Random(11)
    for _ in range(200):
        word = _random_word(rng, rng.randrange(1, 12))
        g = E8.collect_all(E8.identity, word)
        assert E8.collect_word(word) == g
        k = rng.randrange(len(word) + 1)
        assert E8.multiply(E8.from_word(word[:k]), E8.from_word(word[k:])) == g


def test_inverse_and_commutator_of_random_elements():
    rng = random.Random(5)
    for _ in range(100):
        g = E8.from_word(_random_word(rng, 6))
        h = E8.from_word(_random_word(rng, 6))
        assert E8.is_identity(E8.multiply(g, E8.inverse(g)))
        c = E8.commutator(g, h)
        assert E8.multiply(E8.multiply(g, h), c) == E8.multiply(h, g)


@pytest.mark.parametrize("E", [E2, E8], ids=["F2", "F8"])
def test_trivial_arguments_give_identity(E):
    F = E.ring
    for x, y in itertools.product(F.elements(), repeat=2):
        assert E.is_identity(octagon_commutator(F.zero, x, y, engine=E))
        assert E.is_identity(octagon_commutator(x, F.zero, F.zero, engine=E))
        for corrected in (False, True):
            assert E.is_identity(octagon_commutator_closed(F.zero, x, y, F, corrected))
            assert E.is_identity(octagon_commutator_closed(x, F.zero, F.zero, F, corrected))


def test_f2_example():
    # t = u1 = 1, u2 = 0 over F2
    want = OctagonElement(1, 0, 1, 0, 1, 1, 1, 1, 1)
    assert octagon_commutator(1, 1, 0, engine=E2) == want
    assert octagon_commutator_closed(1, 1, 0, F2) == want


def test_product_with_trivial_second_factor():
    for t, u1, u2 in itertools.product(range(8), repeat=3):
        single = octagon_commutator(t, u1, u2, engine=E8)
        assert octagon_product_formula(t, u1, u2, 0, 5, 3, engine=E8) == single
        assert octagon_product_closed(t, u1, u2, 0, 5, 3, F8, corrected=True) == single


def test_product_square():
    for t, u1, u2 in itertools.product(range(8), repeat=3):
        g = octagon_commutator(t, u1, u2, engine=E8)
        assert octagon_product_closed(t, u1, u2, t, u1, u2, F8, corrected=True) == E8.multiply(g, g)


def test_odd_band_groups_commute():
    for a, b in itertools.product(range(8), repeat=2):
        g, h = E8.from_word([("x3", a)]), E8.from_word([("x7", b)])
        assert E8.is_identity(E8.commutator(g, h))


@pytest.mark.parametrize("i", ["2", "6"])
def test_even_root_group_law(i):
    pairs = list(itertools.product(range(8), repeat=2))
    for p, q in itertools.product(pairs, repeat=2):
        g = E8.from_word([("x" + i, p[0]), ("y" + i, p[1])])
        h = E8.from_word([("x" + i, q[0]), ("y" + i, q[1])])
        a, b = even_mul(F8, p, q)
        assert E8.multiply(g, h) == E8.element(**{"a" + i: a, "b" + i: b})


def test_corrected_commutator_exhaustive_f8():
    for t, u1, u2 in itertools.product(range(8), repeat=3):
        assert octagon_commutator(t, u1, u2, engine=E8) == octagon_commutator_closed(t, u1, u2, F8, corrected=True)


def test_corrected_product_sampled_f8():
    rng = random.Random(3)
    for _ in range(300):
        args = [rng.randrange(8) for _ in range(6)]
        assert octagon_product_formula(*args, engine=E8) == octagon_product_closed(*args, F8, corrected=True)


def test_literal_and_corrected_differ_only_in_a6():
    s = F8.sigma
    for t, u1, u2 in itertools.product(range(8), repeat=3):
        lit = octagon_commutator_closed(t, u1, u2, F8)
        cor = octagon_commutator_closed(t, u1, u2, F8, corrected=True)
        assert lit._replace(a6=0) == cor._replace(a6=0)
        ts1 = F8.mul(s(t), t)
        u2s1 = F8.mul(s(u2), u2)
        diff = F8.mul(ts1, F8.add(F8.mul(s(u1), u2s1), F8.mul(u1, F8.mul(u2s1, u2))))
        assert F8.add(lit.a6, cor.a6) == diff


def test_literal_form_holds_over_f2():
    for t, u1, u2 in itertools.product(range(2), repeat=3):
        assert octagon_commutator(t, u1, u2, engine=E2) == octagon_commutator_closed(t, u1, u2, F2)


def test_generic_identity_over_polynomials():
    R = BiPolynomialRing(F8, swap=True)
    a, b = R.a, R.b
    for t, u1, u2 in ((a, b, R.one), (R.one, a, b), (a, R.mul(a, b), b)):
        E = OctagonEngine(R)
        assert octagon_commutator(t, u1, u2, engine=E) == octagon_commutator_closed(t, u1, u2, R, corrected=True)


def test_sigma_errors():
    with pytest.raises(SigmaError):
        OctagonEngine(f4_square())
    with pytest.raises(SigmaError):
        OctagonEngine(PrimeField(3))
    with pytest.raises(SigmaError):
        octagon_commutator(1, 1, 1, ring=f4_square())
