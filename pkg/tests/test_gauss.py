import pytest

from xyangian.algebra import RTTAlgebra
from xyangian.arith import Q
from xyangian.backends import Abstract, Oracle
from xyangian.gauss import (
    Drinfeld,
    GaussData,
    kappa_products,
    matrix_T,
    quantum_minor_A,
    quasideterminant,
    tail_series,
    verify_gauss_product,
)
from xyangian.oracle import EvalMap, OracleRing
from xyangian.relations import u_outcome
from xyangian.series import SeriesMatrix, USeries
from xyangian.tensor import AlgebraContext


def identity_matrix(ring, N, K):
    return SeriesMatrix(ring, [[USeries.one(ring, K) if i == j else USeries.zero(ring, K) for j in range(N)]
                               for i in range(N)], K)


def test_quasideterminants_of_identity():
    ring = OracleRing(1)
    I = identity_matrix(ring, 3, 2)
    assert quasideterminant(I, 1, 1).first_difference(USeries.one(ring, 2)) is None
    # boxed off-diagonal entry over a principal block
    assert quasideterminant(I, 1, 2, [0, 1], [0, 2]).is_zero()


def test_gauss_product_c2():
    alg = RTTAlgebra(AlgebraContext.of("C", 2))
    ok, wit = verify_gauss_product(GaussData(matrix_T(alg, 3), alg.ctx))
    assert ok, wit


@pytest.mark.parametrize("kind,n", [("B", 1), ("D", 2)])
def test_gauss_product_oracle(kind, n):
    ctx = AlgebraContext.of(kind, n)
    ok, wit = verify_gauss_product(GaussData(EvalMap(ctx, (0, 2)).T(3), ctx))
    assert ok, wit


def test_h1_is_t11():
    B = Oracle(AlgebraContext.of("D", 2), 3)
    assert B.G.h[1].first_difference(B.T[0, 0]) is None


def test_quantum_minor_size_one_and_antisymmetry():
    B = Abstract(AlgebraContext.of("A", 3), 3)
    T = B.T
    assert quantum_minor_A(T, [0], [2]).first_difference(T[0, 2]) is None
    a = quantum_minor_A(T, [0, 1], [0, 2])
    b = quantum_minor_A(T, [1, 0], [0, 2])
    assert (a + b).is_zero()


def test_tail_series():
    ring = OracleRing(1)
    x = USeries(ring, [ring.zero(), ring.one(), ring.one(), ring.zero()])
    assert tail_series(x).first_difference(USeries(ring, [ring.zero()] * 2 + [ring.one(), ring.zero()])) is None
    y = USeries(ring, [ring.zero(), ring.zero(), ring.one(), ring.one()])
    assert tail_series(y).first_difference(y) is None


def test_type_b_telescoping():
    # h_1(u)^-1 h_3(u) = kappa_1(u) kappa_2(u + 1/2) at n = 2
    B = Abstract(AlgebraContext.of("B", 2), 3)
    D = B.D
    lhs = B.G.hinv[1] * B.G.h[3]
    rhs = D.kappa_gen[1] * D.kappa_gen[2].shifted(Q(1, 2))
    assert u_outcome(lhs, rhs).ok


@pytest.mark.parametrize("kind,n", [("B", 1), ("C", 2), ("D", 2)])
def test_kappa_products(kind, n):
    B = Oracle(AlgebraContext.of(kind, n), 3)
    z = B.center[0]
    for name, lhs, rhs in kappa_products(B.D):
        assert u_outcome(lhs, z if rhs is None else rhs).ok, name


def test_drinfeld_type_c_factors():
    B = Oracle(AlgebraContext.of("C", 2), 3)
    D, G = B.D, B.G
    assert u_outcome(D.k[2], (G.hinv[2] * G.h[3]).scale(2)).ok
    assert u_outcome(D.xi_minus[2], G.e[(2, 3)].shifted(-1).scale(Q(1, 2))).ok
