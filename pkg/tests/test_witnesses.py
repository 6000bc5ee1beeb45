import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nestedroots.algebra.fields import BiPolynomialRing, PrimeField, f4_square, f8_t4
from nestedroots.coxeter import CoxeterType
from nestedroots.polygon.octagon import SigmaError
from nestedroots.roots import enumerate_roots
from nestedroots.witnesses import (
    FIGURES,
    NC_FAILS,
    WITNESS_VANISHES,
    WitnessConfig,
    WitnessResult,
    classify,
    verify_figure,
    witness_246,
    witness_246_general,
    witness_248,
    witness_248_general,
    witness_266,
    witness_266_general,
    witness_268,
    witness_268_general,
)

from oracles import element_order

F8 = f8_t4()
SWAP = BiPolynomialRing(F8, swap=True)
IDENT = BiPolynomialRing(F8, swap=False)


@pytest.mark.parametrize("p,value", [(5, 4), (7, 1), (2, 0), (3, 0)])
def test_246_examples(p, value):
    K = PrimeField(p)
    v = witness_246(1, [(1, 1)], K)
    assert v == value
    assert classify(v) == (NC_FAILS if value else WITNESS_VANISHES)


def test_266_examples():
    assert witness_266(1, [(1, 1)], PrimeField(5)) == 9 % 5
    assert witness_266(1, [(1, 1)], PrimeField(3)) == 0
    assert witness_266(2, [(1, 1), (3, 4)], PrimeField(7)) == 9 * 2 * 13 % 7


def test_248_examples():
    assert witness_248((0, 1), [(1, (1, SWAP.a))], SWAP) == SWAP.add(SWAP.a, SWAP.b)
    assert witness_248((0, 1), [(1, (1, IDENT.a))], IDENT) == IDENT.zero
    assert classify(IDENT.zero) == WITNESS_VANISHES


def test_268_examples():
    assert witness_268((0, 1), [(1, (0, 1))], SWAP) == SWAP.one
    assert witness_268((0, 3), [(5, (0, 2))], F8) == F8.mul(3, F8.mul(2, 5))


_pairs = st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), max_size=4)


@given(st.integers(0, 6), _pairs, _pairs)
def test_246_266_are_additive(v, p1, p2):
    K = PrimeField(7)
    for f in (witness_246, witness_266):
        assert f(v, p1 + p2, K) == K.add(f(v, p1, K), f(v, p2, K))


@given(st.integers(0, 6), st.integers(0, 6), _pairs)
def test_246_266_linear_in_v(v, c, pairs):
    K = PrimeField(7)
    for f in (witness_246, witness_266):
        assert f(K.mul(c, v), pairs, K) == K.mul(c, f(v, pairs, K))


def test_general_and_specialized_agree():
    rng = random.Random(2)
    for _ in range(100):
        p = rng.choice((2, 3, 5, 7, 11))
        K = PrimeField(p)
        v = rng.randrange(p)
        pairs = [(rng.randrange(p), rng.randrange(p)) for _ in range(rng.randrange(1, 4))]
        assert witness_246(v, pairs, K) == witness_246_general(v, pairs, K)
        assert witness_266(v, pairs, K) == witness_266_general(v, pairs, K)
    for _ in range(100):
        R = rng.choice((SWAP, IDENT))
        u = (R.random(rng), R.random(rng))
        triples = [(R.random(rng), (R.random(rng), R.random(rng))) for _ in range(rng.randrange(1, 3))]
        assert witness_248(u, triples, R) == witness_248_general(u, triples, R)
        assert witness_268(u, triples, R) == witness_268_general(u, triples, R)


def test_248_vanishes_without_tau():
    rng = random.Random(9)
    for _ in range(30):
        u = (IDENT.random(rng), IDENT.random(rng))
        triples = [(IDENT.random(rng), (IDENT.zero, IDENT.random(rng)))]
        assert witness_248(u, triples, IDENT) == IDENT.zero


def test_248_needs_a_tits_ring():
    R = BiPolynomialRing(f4_square(), swap=True)
    with pytest.raises(SigmaError):
        witness_248((0, 1), [(1, (1, R.a))], R)


def test_result_dict():
    cfg = WitnessConfig((2, 4, 6), "1/K", diagram="")
    res = WitnessResult("246", cfg, 4, classify(4))
    d = res.as_dict()
    assert d == {"witness": "246", "type": "2,4,6", "structure": "1/K", "tau": None, "value": "4", "verdict": NC_FAILS}


def _exact(ct, depth, fvec):
    # float_vec is rounded, so match with a relative tolerance
    close = lambda r: all(abs(x - y) < 1e-5 * max(1, abs(y)) for x, y in zip(r.float_vec(), fvec))
    hits = [r for r in enumerate_roots(ct, depth) if close(r)]
    assert len(hits) == 1
    return hits[0]


@pytest.mark.parametrize("labels", sorted(FIGURES))
def test_figure_details(labels):
    rep = verify_figure(labels, depth=8)
    assert rep.found and rep.status == "pass"
    ct = CoxeterType(labels)
    roots = {k: _exact(ct, 10, v) for k, v in rep.roots.items()}
    spec = FIGURES[labels]
    for x, y in spec.infinite:
        prod = roots[x].reflection() * roots[y].reflection()
        assert element_order(prod, limit=48) == 0
        assert rep.checks[f"o({x},{y})"] == "inf"
    for x, y in spec.empty:
        assert rep.checks[f"|({x},{y})|"] == 0
    if spec.m_eps_gamma:
        assert rep.checks["m(eps,gamma)"] == spec.m_eps_gamma
        o = element_order(roots["eps"].reflection() * roots["gamma"].reflection())
        assert o and spec.m_eps_gamma % o == 0
    d = rep.as_dict()
    assert d["status"] == "pass" and set(d["roots"]) == {"alpha", "delta", "gamma", "eps", "eps'"}


def test_figure_cases():
    assert FIGURES[(2, 6, 6)].infinite
    assert FIGURES[(2, 4, 8)].m_eps_gamma == 4
    with pytest.raises(ValueError):
        verify_figure((2, 3, 8))
    rep = verify_figure((2, 4, 6), depth=1)
    assert rep.status in ("pass", "inconclusive")
