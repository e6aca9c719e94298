from hypothesis import given, settings, strategies as st

from xyangian.algebra import RTTAlgebra
from xyangian.arith import Q
from xyangian.gauss import matrix_T
from xyangian.oracle import OracleRing
from xyangian.series import BiSeries, SeriesMatrix, USeries, bracket_uv, divided_difference
from xyangian.tensor import AlgebraContext

RING = OracleRing(1)
K = 5
coeff = st.fractions(max_denominator=7).map(lambda f: RING.scalar(Q(f.numerator, f.denominator)))
series = st.lists(coeff, min_size=K, max_size=K).map(lambda cs: USeries(RING, [RING.one()] + cs))


def S(*cs):
    return USeries(RING, [RING.scalar(c) for c in cs])


def test_inverse_of_one():
    one = USeries.one(RING, K)
    assert one.inverse() == one


def test_geometric_inverse():
    # (1 - u^-1)^-1 = sum u^-r
    assert S(1, -1, 0, 0).inverse() == S(1, 1, 1, 1)


def test_shift_of_inverse_u():
    # 1/(u + c) = u^-1 - c u^-2 + c^2 u^-3
    assert S(0, 1, 0, 0).shifted(Q(1, 2)) == S(0, 1, Q(-1, 2), Q(1, 4))


def test_zero_shift_is_identity():
    x = S(1, 2, 3, 4)
    assert x.shifted(0) == x


def test_divided_difference_of_inverse_u():
    dd = divided_difference(S(0, 1, 0, 0))
    assert dd.d == {(1, 1): RING.scalar(-1)}


def test_divided_difference_of_zero():
    assert not divided_difference(USeries.zero(RING, 4)).d


@settings(max_examples=30, deadline=None)
@given(series, series)
def test_product_and_inverse(a, b):
    assert (a * a.inverse()).first_difference(USeries.one(RING, K)) is None
    assert ((a * b).inverse()).first_difference(b.inverse() * a.inverse()) is None


@settings(max_examples=30, deadline=None)
@given(series, st.fractions(max_denominator=5))
def test_shift_is_multiplicative(a, c):
    c = Q(c.numerator, c.denominator)
    b = a.inverse()
    assert (a.shifted(c) * b.shifted(c)).first_difference(USeries.one(RING, K)) is None
    assert a.shifted(c).shifted(-c).first_difference(a) is None


def test_abstract_inverse_b2():
    alg = RTTAlgebra(AlgebraContext.of("B", 2))
    T = matrix_T(alg, 3)
    h = T[0, 0]
    assert (h * h.inverse()).first_difference(USeries.one(alg, 3)) is None


def test_bracket_uv_of_commuting_series_vanishes():
    a = S(1, 2, 3, 4)
    br = bracket_uv(a, S(1, 5, 6, 7))
    assert br.compare(BiSeries.zero(RING), 1)[0]


def test_matrix_inverse():
    rows = [[S(1, 1, 0, 0), S(0, 2, 1, 0)], [S(0, 0, 3, 1), S(1, 0, 0, 5)]]
    M = SeriesMatrix(RING, rows, 3)
    P = M * M.inverse()
    for i in range(2):
        for j in range(2):
            want = USeries.one(RING, 3) if i == j else USeries.zero(RING, 3)
            assert P[i, j].first_difference(want) is None
