"""The two coefficient rings every identity is run through.

``abstract`` works in the algebra itself (normal forms), ``oracle`` in an
evaluation representation.  Both expose the generator matrix ``T`` together
with lazily built Gauss data, Drinfeld series and the central series.
"""

from functools import cached_property

from .algebra import RTTAlgebra
from .arith import Q, mpq
from .gauss import Drinfeld, GaussData, compute_center, matrix_T, scalar_series_of
from .oracle import EvalMap
from .series import SeriesMatrix, USeries
from .tensor import AlgebraContext

BACKENDS = ("abstract", "oracle")

# two evaluation points: a single evaluation module is too small to separate
# many series (its images satisfy extra polynomial identities)
ORACLE_POINTS = (Q(0), Q(2))
# fixed scalar coefficients of f(u) used on the oracle
ORACLE_F = (Q(3, 7), Q(-2, 5))


class Backend:
    name = None

    def __init__(self, ctx, K):
        self.ctx = ctx
        self.K = K

    @property
    def ring(self):
        return self.T.ring

    @cached_property
    def G(self):
        return GaussData(self.T, self.ctx)

    @cached_property
    def D(self):
        return Drinfeld(self.G)

    @cached_property
    def center(self):
        """``(z, witness)``; ``z`` is None when ``T'(u+kappa)T(u)`` is not scalar."""
        return scalar_series_of(compute_center(self.T, self.ctx))

    def sub_T(self, m):
        """``T^[m] = F^[m] H^[m] E^[m]`` on the indices ``m+1 .. (m+1)'``."""
        return sub_matrix_T(self.G, self.ctx, m)

    def describe(self):
        return {"backend": self.name, "ctx": self.ctx.label, "K": self.K}


class Abstract(Backend):
    name = "abstract"

    def __init__(self, ctx, K, alg=None):
        super().__init__(ctx, K)
        self.alg = alg or RTTAlgebra(ctx)

    @cached_property
    def T(self):
        return matrix_T(self.alg, self.K)

    def twisted(self):
        """``(T, f)`` over an algebra with two central letters ``f1, f2``.

        ``f(u) = 1 + f1 u^-1 + f2 u^-2`` is kept symbolic, so invariance checks
        hold for every choice of the two scalars.
        """
        alg = RTTAlgebra(self.ctx, params=("f1", "f2"))
        K = self.K
        f = USeries(alg, [alg.one(), alg.param("f1"), alg.param("f2")] + [alg.zero()] * (K - 2))
        return matrix_T(alg, K), f.truncate(K)

    def generator(self, i, j, r):
        return self.alg.t(i, j, r)


class Oracle(Backend):
    name = "oracle"

    def __init__(self, ctx, K, points=ORACLE_POINTS):
        super().__init__(ctx, K)
        self.ev = EvalMap(ctx, points)

    @cached_property
    def T(self):
        return self.ev.T(self.K)

    def twisted(self):
        ring, K = self.ring, self.K
        f = USeries(ring, [ring.one()] + [ring.scalar(c) for c in ORACLE_F] + [ring.zero()] * (K - 2))
        return self.T, f.truncate(K)

    def generator(self, i, j, r):
        return self.ev.image(i, j, r)

    def describe(self):
        d = super().describe()
        d["points"] = [str(a) for a in self.ev.points]
        return d


def make_backend(name, ctx, K):
    if name == "abstract":
        return Abstract(ctx, K)
    if name == "oracle":
        return Oracle(ctx, K)
    raise ValueError("unknown backend %r" % (name,))


def sub_matrix_T(G, ctx, m):
    idx = list(range(m + 1, ctx.N - m + 1))
    ring, K = G.ring, G.K
    one, zero = USeries.one(ring, K), USeries.zero(ring, K)
    F = [[one if a == b else (G.f[(a, b)] if a > b else zero) for b in idx] for a in idx]
    H = [[G.h[a] if a == b else zero for b in idx] for a in idx]
    E = [[one if a == b else (G.e[(a, b)] if a < b else zero) for b in idx] for a in idx]
    return SeriesMatrix(ring, F, K) * SeriesMatrix(ring, H, K) * SeriesMatrix(ring, E, K)


def scale_matrix(T, f):
    """``f(u) T(u)`` for a central series ``f``."""
    rows = [[f * s for s in row] for row in T.rows]
    return SeriesMatrix(T.ring, rows, T.K)
