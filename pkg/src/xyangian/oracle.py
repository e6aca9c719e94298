"""Evaluation representations used as an independent oracle.

``t_ij(u)`` acts on C^N as the ``(i, j)`` block of ``R(u - a)``, i.e.
``t_ij^(r) -> -a^(r-1) e_ji + (a + kappa)^(r-1) theta_ij e_i'j'``.  The RTT
relation for this assignment is the Yang-Baxter equation, so every identity of
the algebra must hold for the image matrices.  Several points give the tensor
product of evaluation modules through the coproduct ``t_ij -> sum_k t_ik (x) t_kj``.
"""

import numpy as np

from .arith import ONE, ZERO, RationalFunction, mpq
from .outcome import Outcome
from .rmatrix import RMatrix, _grid
from .series import SeriesMatrix, USeries
from .tensor import RingMatrix, place_legs

RF = RationalFunction


def _zeros(n):
    m = np.empty((n, n), dtype=object)
    m.fill(ZERO)
    return m


def _eye(n, c=ONE):
    m = _zeros(n)
    for i in range(n):
        m[i, i] = c
    return m


class OMat:
    """Exact rational square matrix used as a ring element."""

    __slots__ = ("m",)

    def __init__(self, m):
        self.m = m

    @property
    def n(self):
        return self.m.shape[0]

    def __add__(self, other):
        return OMat(self.m + other.m)

    def __sub__(self, other):
        return OMat(self.m - other.m)

    def __neg__(self):
        return OMat(-self.m)

    def __mul__(self, other):
        if isinstance(other, OMat):
            return OMat(self.m.dot(other.m))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, s):
        return OMat(self.m * mpq(s))

    def is_zero(self):
        return not self.m.any()

    def __eq__(self, other):
        if not isinstance(other, OMat):
            return NotImplemented
        return not (self.m - other.m).any()

    def __hash__(self):
        return hash(tuple(self.m.flat))

    def scalar_part(self):
        n = self.n
        c = self.m[0, 0]
        for i in range(n):
            for j in range(n):
                if self.m[i, j] != (c if i == j else 0):
                    return None
        return c

    def __repr__(self):
        nz = [(i, j, self.m[i, j]) for i in range(self.n) for j in range(self.n) if self.m[i, j] != 0]
        return "OMat{%s}" % ", ".join("(%d,%d):%s" % (i + 1, j + 1, v) for i, j, v in nz[:12]) + (
            "..." if len(nz) > 12 else "")


class OracleRing:
    def __init__(self, dim):
        self.dim = dim

    def zero(self):
        return OMat(_zeros(self.dim))

    def one(self):
        return OMat(_eye(self.dim))

    def scalar(self, c):
        return OMat(_eye(self.dim, mpq(c)))


def _pow(a, k):
    return ONE if k == 0 else a ** k


def eval_image(ctx, i, j, r, a=ZERO):
    """Image of ``t_ij^(r)`` (``r >= 1``) at the evaluation point ``a`` as an N x N array."""
    N = ctx.N
    m = _zeros(N)
    a = mpq(a)
    m[j - 1, i - 1] -= _pow(a, r - 1)
    if ctx.kind != "A":
        m[ctx.prime(i) - 1, ctx.prime(j) - 1] += _pow(a + ctx.kappa, r - 1) * ctx.theta(i, j)
    return m


class EvalMap:
    """Homomorphism from the algebra of ``ctx`` to matrices, one factor per point."""

    def __init__(self, ctx, points=(ZERO,)):
        self.ctx = ctx
        self.points = tuple(mpq(a) for a in points)
        self.dim = ctx.N ** len(self.points)
        self.ring = OracleRing(self.dim)
        self._cache = {}

    def _single(self, i, j, r, a):
        if r == 0:
            return _eye(self.ctx.N) if i == j else _zeros(self.ctx.N)
        return eval_image(self.ctx, i, j, r, a)

    def image(self, i, j, r):
        """Image of ``t_ij^(r)`` (``r = 0`` gives ``delta_ij``)."""
        key = (i, j, r)
        if key in self._cache:
            return self._cache[key]
        N = self.ctx.N
        pts = self.points
        # coefficient of u^-r in sum_k t_ik(u) (x) ... over all splittings of r
        acc = {}

        def rec(level, i0, rem, mat):
            if level == len(pts) - 1:
                m = np.kron(mat, self._single(i0, j, rem, pts[level])) if mat is not None else self._single(i0, j, rem, pts[level])
                acc["m"] = acc["m"] + m if "m" in acc else m
                return
            for k in range(1, N + 1):
                for p in range(rem + 1):
                    s = self._single(i0, k, p, pts[level])
                    if not s.any():
                        continue
                    rec(level + 1, k, rem - p, s if mat is None else np.kron(mat, s))

        rec(0, i, r, None)
        out = OMat(acc.get("m", _zeros(self.dim)))
        self._cache[key] = out
        return out

    def eval_word(self, alg, w):
        m = self.ring.one()
        for x in w:
            g = alg.decode(x)
            if isinstance(g, str):
                raise ValueError("cannot evaluate central parameter %s" % g)
            m = m * self.image(g.i, g.j, g.r)
        return m

    def eval_poly(self, p):
        """Image of an ``NCPoly`` (any word, normal or not)."""
        out = self.ring.zero()
        for w, c in p.terms.items():
            out = out + self.eval_word(p.alg, w).scale(c)
        return out

    def T(self, K):
        """``T(u)`` truncated at ``u^-K`` as a matrix of series."""
        N = self.ctx.N
        rows = [[USeries(self.ring, [self.image(i, j, r) for r in range(K + 1)])
                 for j in range(1, N + 1)] for i in range(1, N + 1)]
        return SeriesMatrix(self.ring, rows, K)

    def T_rf(self):
        """Exact ``T(u)``: an N x N list of ``RingMatrix`` blocks with ``Q(u)`` entries.

        Only available for a single evaluation point.
        """
        if len(self.points) != 1:
            raise ValueError("exact images are built for one evaluation point")
        N = self.ctx.N
        a = self.points[0]
        R = RMatrix(self.ctx).rf(-a)
        zero = RF.const(0)
        blocks = []
        for i in range(N):
            row = []
            for j in range(N):
                data = {}
                for p in range(N):
                    for q in range(N):
                        v = R[i * N + p, j * N + q]
                        if not v.is_zero():
                            data[(p, q)] = v
                row.append(RingMatrix(N, N, data, zero))
            blocks.append(row)
        return blocks


def build_eval(ctx, a=ZERO, points=None):
    return EvalMap(ctx, points if points is not None else (a,))


def verify_eval_rtt(ctx, a=ZERO):
    """``R_12(u-v) T_1(u) T_2(v) = T_2(v) T_1(u) R_12(u-v)`` for the evaluation images.

    ``T_1(u)`` is assembled from the images ``t_ij(u)`` as an operator on
    C^N (x) C^N (x) V with V the evaluation module; after multiplying by the
    pole-clearing scalar both sides are polynomials of degree at most 4 in
    each of u and v, decided on a 5 x 5 product grid.
    """
    a = mpq(a)
    R = RMatrix(ctx)
    N = ctx.N
    d = R.cleared_degree
    forbidden = {ZERO, ONE, R.kappa, R.kappa + 1}
    vs = _grid({x + a for x in forbidden}, 2 * d + 1, 11)
    us = _grid({x + a for x in forbidden}, 2 * d + 1, 101)

    def T_leg(x, leg):
        # T(x) on C^N (x) V is R(x - a); cleared of its poles and placed on ``leg``
        return place_legs(R.cleared_at(x - a), (leg, 2), 3, N)

    checked = 0
    for u in us:
        T1 = T_leg(u, 0)
        for v in vs:
            R12 = place_legs(R.cleared_at(u - v), (0, 1), 3, N)
            T2 = T_leg(v, 1)
            lhs = R12 * T1 * T2
            rhs = T2 * T1 * R12
            checked += 1
            diff = lhs.first_difference(rhs)
            if diff is not None:
                return Outcome(False, checked, {"u": str(u), "v": str(v), "index": list(diff[0])})
    return Outcome(True, checked)
