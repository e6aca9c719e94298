import random

import pytest
from hypothesis import given, settings, strategies as st

from xyangian.algebra import RTTAlgebra, commutator
from xyangian.pbw import (
    check_degree_drop,
    check_idempotence,
    check_jacobi,
    check_termination,
    is_normal_word,
    pbw_cases,
)
from xyangian.tensor import AlgebraContext

from conftest import assert_cases_pass

KEYS = [("A", 3), ("B", 1), ("C", 1), ("C", 2), ("D", 2)]
ALGS = {k: RTTAlgebra(AlgebraContext.of(*k)) for k in KEYS}


def words(alg, rmax=2, max_len=4):
    N = alg.N
    letter = st.tuples(st.integers(1, N), st.integers(1, N), st.integers(1, rmax)).map(lambda g: alg.encode(*g))
    return st.lists(letter, min_size=0, max_size=max_len).map(tuple)


@pytest.mark.parametrize("key", KEYS, ids=str)
def test_pbw_suite(key):
    assert_cases_pass(pbw_cases(AlgebraContext.of(*key), seed=3, rmax=2))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_normal_order_is_normal_and_idempotent(data):
    key = data.draw(st.sampled_from(KEYS))
    alg = ALGS[key]
    w = data.draw(words(alg))
    nf = alg.normal_order({w: 1})
    assert all(is_normal_word(alg, v) for v in nf.terms)
    assert alg.normal_order(nf.free()).terms == nf.terms
    deg = alg.filtration_degree(w)
    assert all(alg.filtration_degree(v) <= deg for v in nf.terms)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_normal_order_is_multiplicative(data):
    alg = ALGS[data.draw(st.sampled_from(KEYS))]
    v, w = data.draw(words(alg, max_len=2)), data.draw(words(alg, max_len=2))
    lhs = alg.normal_order({v + w: 1})
    rhs = alg.normal_order({v: 1}) * alg.normal_order({w: 1})
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_associativity(data):
    alg = ALGS[data.draw(st.sampled_from(KEYS))]
    N = alg.N
    g = st.tuples(st.integers(1, N), st.integers(1, N), st.integers(1, 2))
    a, b, c = (alg.t(*data.draw(g)) for _ in range(3))
    assert (a * b) * c == a * (b * c)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_jacobi_property(data):
    alg = ALGS[data.draw(st.sampled_from(KEYS))]
    N = alg.N
    g = st.tuples(st.integers(1, N), st.integers(1, N), st.integers(1, 3))
    x, y, z = (alg.t(*data.draw(g)) for _ in range(3))
    s = commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y))
    assert s.is_zero()


def test_degree_drop_all():
    for alg in ALGS.values():
        assert check_degree_drop(alg, 3).ok


def test_checks_report_witnesses():
    alg = ALGS[("B", 1)]
    rng = random.Random(0)
    assert check_termination(alg, rng, count=5).checked == 5
    assert check_idempotence(alg, rng, count=5).ok
    assert check_jacobi(alg, rng, count=5).ok


def test_broken_rule_is_caught(monkeypatch):
    alg = RTTAlgebra(AlgebraContext.of("B", 1))
    real = alg.commutator_words

    def bad(i, j, r, k, l, s, tag=0):
        out = dict(real(i, j, r, k, l, s, tag))
        if r == 2 and s == 2:
            # a quadratic term at the top degree violates the filtration bound
            out[(alg.encode(1, 1, 2), alg.encode(2, 2, 2))] = 1
        return out

    monkeypatch.setattr(alg, "commutator_words", bad)
    out = check_degree_drop(alg, 2)
    assert not out.ok and "term" in out.witness


def test_seed_is_reproducible():
    ctx = AlgebraContext.of("C", 1)
    a = [c.run().checked for c in pbw_cases(ctx, seed=5, rmax=2)]
    b = [c.run().checked for c in pbw_cases(ctx, seed=5, rmax=2)]
    assert a == b
