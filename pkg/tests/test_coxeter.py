import random

import pytest

from nestedroots.coxeter import (
    CoxeterType,
    Residue,
    distance,
    enumerate_elements,
    left_descents,
    minimal_gallery,
    multiply,
    projection,
)

from oracles import ball, reduced_words

TYPES = [(2, 3, 8), (2, 4, 6), (3, 3, 4), (2, 4, 4), (2, 3, 3), (8,), (6,)]


def test_type_classification():
    assert CoxeterType((2, 3, 3)).is_spherical
    assert CoxeterType((2, 4, 4)).is_affine and CoxeterType((3, 3, 3)).is_affine
    assert CoxeterType((2, 3, 8)).is_hyperbolic
    assert CoxeterType((3, 3, 4)).is_complete_graph and not CoxeterType((2, 3, 8)).is_complete_graph
    assert CoxeterType((3, 3, 3)).is_simply_laced


def test_bad_labels():
    with pytest.raises(ValueError):
        CoxeterType((2, 5, 8))
    with pytest.raises(ValueError):
        CoxeterType((2, 3))


@pytest.mark.parametrize("labels", TYPES)
def test_involutions_and_braid_relations(labels):
    ct = CoxeterType(labels)
    for s in ct.generators:
        assert ct.element([s, s]).is_identity()
    for s in ct.generators:
        for t in ct.generators:
            if s < t:
                m = ct.m[s][t]
                assert ct.element([s, t] * m).is_identity()
                assert not ct.element([s, t] * (m - 1)).is_identity()


@pytest.mark.parametrize("labels", TYPES)
def test_sts_has_length_three(labels):
    ct = CoxeterType(labels)
    B = ball(labels, 3)
    for s in ct.generators:
        for t in ct.generators:
            if s != t and ct.m[s][t] >= 3:
                w = ct.element([s, t, s])
                assert w.length == 3 == B.length[w]


@pytest.mark.parametrize("labels", [(2, 3, 8), (3, 3, 4), (2, 4, 6)])
def test_matrix_preserves_form(labels):
    ct = CoxeterType(labels)
    for w in enumerate_elements(ct, 4):
        for s in ct.generators:
            for t in ct.generators:
                assert ct.bilinear(w.column(s), w.column(t)) == ct.A[s][t]


def test_descents_examples():
    ct = CoxeterType((2, 4, 4))
    assert left_descents(ct.identity) == frozenset()
    assert left_descents(ct.element([1])) == {1}
    w = ct.element([1, 2, 1])
    assert ct.m[1][2] == 4
    assert left_descents(w) == {1}
    assert {word[0] for word in reduced_words(w)} == {1}


@pytest.mark.parametrize("labels", [(2, 3, 8), (3, 3, 4)])
def test_descents_match_reduced_words(labels):
    ct = CoxeterType(labels)
    for w in enumerate_elements(ct, 5):
        firsts = {word[0] for word in reduced_words(w)} if w.length else set()
        lasts = {word[-1] for word in reduced_words(w)} if w.length else set()
        assert w.left_descents() == firsts
        assert w.right_descents() == lasts


@pytest.mark.parametrize("labels", TYPES)
def test_lengths_match_bfs(labels):
    ct = CoxeterType(labels)
    B = ball(labels, 8)
    elems = enumerate_elements(ct, 8)
    assert len(elems) == len(B.length)
    for w in elems:
        assert w.length == B.length[w] == len(w.word)
        for s in ct.generators:
            assert abs(w.right_mul(s).length - w.length) == 1


def _braid_classes(ct, n_max):
    """Number of elements of each length, counted on words alone.

    A word is reduced iff nothing in its braid class contains ss; two reduced
    words name the same element iff they are braid-equivalent.
    """
    moves = []
    for s in ct.generators:
        for t in ct.generators:
            if s != t:
                m = ct.m[s][t]
                moves.append((tuple((s, t)[i % 2] for i in range(m)), tuple((t, s)[i % 2] for i in range(m))))

    def closure(word):
        seen = {word}
        stack = [word]
        while stack:
            w = stack.pop()
            for lhs, rhs in moves:
                k = len(lhs)
                for i in range(len(w) - k + 1):
                    if w[i : i + k] == lhs:
                        v = w[:i] + rhs + w[i + k :]
                        if v not in seen:
                            seen.add(v)
                            stack.append(v)
        return frozenset(seen)

    counts = [1]
    layer = {frozenset({()})}
    for _ in range(n_max):
        nxt = set()
        for cls in layer:
            rep = min(cls)
            for s in ct.generators:
                c = closure(rep + (s,))
                if any(w[i] == w[i + 1] for w in c for i in range(len(w) - 1)):
                    continue
                nxt.add(c)
        counts.append(len(nxt))
        layer = nxt
    return counts


@pytest.mark.parametrize("labels", [(2, 3, 8), (3, 3, 4), (2, 4, 6), (8,)])
def test_element_counts_match_word_rewriting(labels):
    ct = CoxeterType(labels)
    by_len = [0] * 9
    for w in enumerate_elements(ct, 8):
        by_len[w.length] += 1
    assert by_len == _braid_classes(ct, 8)


def test_projection_examples():
    ct = CoxeterType((2, 4, 6))
    s, t = 0, 1
    R = Residue(ct.element([s]), {t})
    assert projection(ct.identity, R) == ct.element([s])
    x = ct.element([s, t])
    assert projection(x, R) == x


@pytest.mark.parametrize("labels", [(2, 4, 6), (2, 3, 8), (3, 3, 4)])
def test_gate_property(labels):
    ct = CoxeterType(labels)
    # x and c have length <= 6 and residues have at most 16 chambers
    B = ball(labels, 6 + 6 + 8)
    elems = enumerate_elements(ct, 6)
    rng = random.Random(7)
    for _ in range(100):
        x = rng.choice(elems)
        c = rng.choice(elems)
        J = frozenset(rng.sample(list(ct.generators), rng.choice((1, 2))))
        R = Residue(c, J)
        z = projection(x, R)
        assert z in R
        chambers = R.chambers()
        # brute-force minimization of the distance, then the gate identity
        best = min(chambers, key=lambda y: B.dist(x, y))
        assert best == z
        for y in chambers:
            assert B.dist(x, y) == B.dist(x, z) + B.dist(z, y)


def test_minimal_gallery_examples():
    ct = CoxeterType((2, 4, 6))
    w = ct.element([0, 1])
    assert minimal_gallery(w, w) == [w]
    assert minimal_gallery(ct.identity, w) == [ct.identity, ct.element([0]), w]


@pytest.mark.parametrize("labels", [(2, 3, 8), (2, 4, 6)])
def test_minimal_gallery_lengths(labels):
    ct = CoxeterType(labels)
    B = ball(labels, 6)
    for w in enumerate_elements(ct, 6):
        gal = minimal_gallery(ct.identity, w)
        assert len(gal) - 1 == B.length[w]
        for a, b in zip(gal, gal[1:]):
            assert distance(a, b) == 1


def test_multiply_type_mismatch():
    a = CoxeterType((2, 3, 8)).element([0])
    b = CoxeterType((2, 4, 6)).element([0])
    with pytest.raises((TypeError, ValueError)):
        multiply(a, b)


def test_residue_membership():
    ct = CoxeterType((2, 3, 8))
    R = Residue(ct.element([0]), {1, 2})
    assert len(R.chambers()) == 2 * ct.m[1][2]
    assert all(x in R for x in R.chambers())
    assert ct.identity not in R
    assert R.rank == 2
