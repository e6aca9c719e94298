import pytest

from xyangian.algebra import RTTAlgebra
from xyangian.oracle import EvalMap, eval_image, verify_eval_rtt
from xyangian.pbw import check_soundness
from xyangian.rmatrix import RMatrix
from xyangian.tensor import AlgebraContext

CTXS = [("A", 2), ("B", 1), ("C", 2), ("D", 2)]


@pytest.mark.parametrize("kind,n", CTXS)
def test_rtt_at_zero(kind, n):
    assert verify_eval_rtt(AlgebraContext.of(kind, n), 0).ok


def test_rtt_at_other_point():
    assert verify_eval_rtt(AlgebraContext.of("B", 1), 3).ok


def test_first_coefficient_is_minus_P_plus_Q_slice():
    ctx = AlgebraContext.of("C", 2)
    R = RMatrix(ctx)
    N = ctx.N
    for i in range(N):
        for j in range(N):
            m = eval_image(ctx, i + 1, j + 1, 1, 5)
            for p in range(N):
                for q in range(N):
                    assert m[p, q] == -R.P[i * N + p, j * N + q] + R.Q[i * N + p, j * N + q]


def test_unit_word():
    ctx = AlgebraContext.of("B", 1)
    ev = EvalMap(ctx)
    assert ev.eval_word(RTTAlgebra(ctx), ()) == ev.ring.one()


def test_normal_form_evaluates_like_original():
    ctx = AlgebraContext.of("D", 2)
    alg = RTTAlgebra(ctx)
    ev = EvalMap(ctx, (0, 1))
    w = alg.letter(4, 1, 2) * alg.letter(1, 1, 1) * alg.letter(3, 2, 1)
    assert ev.eval_poly(w) == ev.eval_poly(w.normal_order())


def test_two_points_are_a_coproduct():
    # t_ij^(1) acts as t_ij^(1) (x) 1 + 1 (x) t_ij^(1)
    import numpy as np

    ctx = AlgebraContext.of("B", 1)
    ev = EvalMap(ctx, (0, 2))
    a, b = EvalMap(ctx, (0,)), EvalMap(ctx, (2,))
    I = np.identity(ctx.N, dtype=object)
    x = ev.image(1, 2, 1).m
    assert (x == np.kron(a.image(1, 2, 1).m, I) + np.kron(I, b.image(1, 2, 1).m)).all()


@pytest.mark.parametrize("kind,n", [("B", 1), ("C", 2), ("D", 2)])
def test_soundness(kind, n):
    out = check_soundness(AlgebraContext.of(kind, n), rmax=2)
    assert out.ok, out.witness
