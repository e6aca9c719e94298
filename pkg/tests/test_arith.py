from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from xyangian.arith import Poly, Q, RationalFunction as RF, expand_at_infinity, poly_gcd

rationals = st.fractions(max_denominator=50).map(lambda f: Q(f.numerator, f.denominator))
polys = st.lists(rationals, max_size=4).map(Poly)


def test_difference_of_inverse_linears():
    f = RF.inv_linear(1) - RF.inv_linear(0)
    assert f == RF(Poly([1]), Poly([0, -1, 1]))


def test_expansion_of_u_over_u_minus_one():
    f = RF(Poly([0, 1]), Poly([-1, 1]))
    assert expand_at_infinity(f, 2) == [1, 1, 1]


def test_pole_at_infinity_is_rejected():
    with pytest.raises(ValueError):
        expand_at_infinity(RF(Poly([0, 0, 1])), 2)


def test_zero_polynomial_degree_sentinel():
    assert Poly().degree == -1
    assert Poly([0, 0]).is_zero()


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RF(Poly([1]), Poly())


def test_q_coercions():
    assert Q("3/4") == Q(3, 4) == Q(Fraction(3, 4))


@given(polys, polys)
def test_poly_ring_axioms(a, b):
    assert a * b == b * a
    assert (a + b) - b == a
    if not b.is_zero():
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.degree < b.degree


@given(polys, polys)
def test_gcd_divides(a, b):
    g = poly_gcd(a, b)
    if not g.is_zero():
        assert (a % g).is_zero() and (b % g).is_zero()


@given(polys, polys.filter(lambda p: not p.is_zero()), rationals)
def test_rational_function_evaluation(a, b, x):
    f = RF(a, b)
    if b(x) != 0:
        assert f(x) == a(x) / b(x)


@given(polys.filter(lambda p: not p.is_zero()), rationals)
def test_shift_composes(a, c):
    f = RF(Poly([1]), a)
    assert f.shift(c).shift(-c) == f


@given(st.integers(0, 3), rationals)
def test_expansion_of_inverse_power(r, c):
    # (u - c)^-1 = sum_k c^k u^(-k-1)
    coeffs = expand_at_infinity(RF.inv_linear(c), 4)
    assert coeffs == [0] + [c ** k for k in range(4)]
