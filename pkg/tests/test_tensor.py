import pytest

from xyangian.arith import ONE
from xyangian.tensor import (
    AlgebraContext,
    ContextError,
    RingMatrix,
    lie_generator_F,
    matrix_unit,
    op_P,
    op_Q,
    place_legs,
    transpose_prime,
)

CTXS = [AlgebraContext.of(k, n) for k, n in (("B", 1), ("B", 2), ("C", 1), ("C", 2), ("D", 2), ("D", 3))]


def trace(M):
    return sum(M[i, i] for i in range(M.rows))


@pytest.mark.parametrize("N", [2, 3, 4])
def test_trace_of_P(N):
    assert trace(op_P(N)) == N


@pytest.mark.parametrize("ctx", CTXS, ids=lambda c: c.label)
def test_P_and_Q_algebra(ctx):
    N = ctx.N
    P, Qm = op_P(N), op_Q(ctx)
    I = RingMatrix.identity(N * N)
    assert P * P == I
    assert Qm * Qm == Qm.scale(N)
    sign = 1 if ctx.orthogonal else -1
    assert P * Qm == Qm.scale(sign)
    assert Qm * P == Qm.scale(sign)


def test_place_legs_identity():
    N = 2
    assert place_legs(RingMatrix.identity(N), (1,), 3, N) == RingMatrix.identity(N ** 3)


def test_P13_swaps_outer_legs():
    N = 2
    P13 = place_legs(op_P(N), (0, 2), 3, N)
    for a in range(N):
        for b in range(N):
            for c in range(N):
                src = (a * N + b) * N + c
                dst = (c * N + b) * N + a
                assert P13[dst, src] == ONE


@pytest.mark.parametrize("ctx", CTXS, ids=lambda c: c.label)
def test_double_transpose(ctx):
    N = ctx.N
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            X = matrix_unit(N, i, j)
            assert transpose_prime(ctx, transpose_prime(ctx, X)) == X
    I = RingMatrix.identity(N)
    assert transpose_prime(ctx, I) == I


@pytest.mark.parametrize("ctx", CTXS, ids=lambda c: c.label)
def test_lie_generators_antisymmetry(ctx):
    N, p = ctx.N, ctx.prime
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            s = lie_generator_F(ctx, i, j) + lie_generator_F(ctx, p(j), p(i)).scale(ctx.theta(i, j))
            assert s.is_zero()


def test_context_validation():
    with pytest.raises(ContextError):
        AlgebraContext("E", 3)
    with pytest.raises(ContextError):
        AlgebraContext("B", 4)
    with pytest.raises(ContextError):
        AlgebraContext("C", 5)
    assert AlgebraContext.of("B", 2).N == 5
    assert AlgebraContext.of("C", 2).kappa == 3
    assert AlgebraContext.of("D", 3).kappa == 2
    assert AlgebraContext.of("B", 1).kappa == AlgebraContext("B", 3).kappa
    assert AlgebraContext.of("C", 2).sub(1) == AlgebraContext("C", 2)
