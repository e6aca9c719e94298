"""Quasideterminants, the Gauss decomposition ``T = F H E`` and derived series.

Everything here works over any coefficient ring (normal forms in the abstract
algebra, or matrices from an evaluation representation), so each identity can
be run through both backends unchanged.
"""

from itertools import permutations

from .arith import ONE, Q, mpq
from .series import SeriesMatrix, USeries
from .tensor import RootData


def matrix_T(alg, K, tag=0):
    """``T(u)`` of the abstract algebra truncated at ``u^-K``."""
    N = alg.N
    rows = []
    for i in range(1, N + 1):
        row = []
        for j in range(1, N + 1):
            cs = [alg.scalar(1 if i == j else 0)] + [alg.t(i, j, r, tag) for r in range(1, K + 1)]
            row.append(USeries(alg, cs))
        rows.append(row)
    return SeriesMatrix(alg, rows, K)


def _dot(row, col):
    acc = None
    for a, b in zip(row, col):
        t = a * b
        acc = t if acc is None else acc + t
    return acc


def quasideterminant(M, i, j, rows=None, cols=None):
    """``|A|_ij = a_ij - r_i (A^{ij})^{-1} c_j`` over a chosen row and column set.

    ``rows`` and ``cols`` (0-based, default all) list the submatrix; ``i`` and
    ``j`` are the boxed row and column, which must belong to them.  The block
    ``A^{ij}`` is inverted in one go as a matrix series.
    """
    rows = list(range(M.shape[0])) if rows is None else list(rows)
    cols = list(range(M.shape[1])) if cols is None else list(cols)
    ro = [r for r in rows if r != i]
    co = [c for c in cols if c != j]
    a = M[i, j]
    if not ro:
        return a
    B = M.sub(ro, co).inverse()
    r_i = [M[i, c] for c in co]
    c_j = [M[r, j] for r in ro]
    n = len(ro)
    tmp = [_dot(r_i, [B[k, l] for k in range(n)]) for l in range(n)]
    return a - _dot(tmp, c_j)


class GaussData:
    """Gaussian generators ``h_i``, ``e_ij`` (i<j), ``f_ji`` (j>i), 1-based.

    The principal block ``rows/cols 1..i-1`` is inverted once per ``i`` and
    shared by ``h_i``, every ``e_ij`` and every ``f_ji``.
    """

    def __init__(self, T, ctx):
        self.T = T
        self.ctx = ctx
        self.ring = T.ring
        self.K = T.K
        N = T.shape[0]
        self.N = N
        self.h, self.hinv, self.e, self.f = {}, {}, {}, {}
        for i in range(1, N + 1):
            m = i - 1
            if m == 0:
                h = T[0, 0]
                hinv = h.inverse()
                self.h[1], self.hinv[1] = h, hinv
                for j in range(2, N + 1):
                    self.e[(1, j)] = hinv * T[0, j - 1]
                    self.f[(j, 1)] = T[j - 1, 0] * hinv
                continue
            idx = list(range(m))
            B = T.sub(idx, idx).inverse()
            rowvec = [_dot([T[i - 1, a] for a in idx], [B[a, b] for a in idx]) for b in idx]
            colvec = [_dot([B[a, b] for b in idx], [T[b, i - 1] for b in idx]) for a in idx]
            h = T[i - 1, i - 1] - _dot(rowvec, [T[b, i - 1] for b in idx])
            hinv = h.inverse()
            self.h[i], self.hinv[i] = h, hinv
            for j in range(i + 1, N + 1):
                q = T[i - 1, j - 1] - _dot(rowvec, [T[b, j - 1] for b in idx])
                self.e[(i, j)] = hinv * q
                q = T[j - 1, i - 1] - _dot([T[j - 1, a] for a in idx], colvec)
                self.f[(j, i)] = q * hinv

    def F(self):
        N, ring, K = self.N, self.ring, self.K
        return SeriesMatrix(ring, [[USeries.one(ring, K) if i == j else (self.f[(i + 1, j + 1)] if i > j else USeries.zero(ring, K))
                                    for j in range(N)] for i in range(N)], K)

    def E(self):
        N, ring, K = self.N, self.ring, self.K
        return SeriesMatrix(ring, [[USeries.one(ring, K) if i == j else (self.e[(i + 1, j + 1)] if i < j else USeries.zero(ring, K))
                                    for j in range(N)] for i in range(N)], K)

    def H(self):
        N, ring, K = self.N, self.ring, self.K
        return SeriesMatrix(ring, [[self.h[i + 1] if i == j else USeries.zero(ring, K) for j in range(N)] for i in range(N)], K)


def gauss_decompose(T, ctx):
    return GaussData(T, ctx)


def verify_gauss_product(G):
    """``F H E`` reproduces ``T`` coefficient by coefficient."""
    P = G.F() * G.H() * G.E()
    N = G.N
    for i in range(N):
        for j in range(N):
            d = P[i, j].first_difference(G.T[i, j])
            if d is not None:
                return False, {"i": i + 1, "j": j + 1, "order": d[0]}
    return True, None


class Drinfeld:
    """The series of the Drinfeld-type presentation built from Gauss data.

    ``e[i], f[i], k[i]`` for ``i = 1..n`` and ``h[i]`` for ``i = 1..n+1`` follow
    the unshifted conventions; ``kappa_gen, xi_plus, xi_minus`` are the shifted
    generators of the main presentation.
    """

    def __init__(self, G):
        ctx = G.ctx
        n = ctx.n
        kind = ctx.kind
        self.G = G
        self.ctx = ctx
        self.n = n
        self.roots = RootData(ctx)
        self.h = {i: G.h[i] for i in range(1, n + 2)}
        self.hinv = {i: G.hinv[i] for i in range(1, n + 2)}
        self.e, self.f, self.k = {}, {}, {}
        for i in range(1, n):
            self.e[i] = G.e[(i, i + 1)]
            self.f[i] = G.f[(i + 1, i)]
            self.k[i] = G.hinv[i] * G.h[i + 1]
        if kind == "D":
            self.e[n] = G.e[(n - 1, n + 1)]
            self.f[n] = G.f[(n + 1, n - 1)]
            self.k[n] = G.hinv[n - 1] * G.h[n + 1]
        else:
            self.e[n] = G.e[(n, n + 1)]
            self.f[n] = G.f[(n + 1, n)]
            self.k[n] = G.hinv[n] * G.h[n + 1]
            if kind == "C":
                self.k[n] = self.k[n].scale(2)
        self.shift = {}
        self.kappa_gen, self.xi_plus, self.xi_minus = {}, {}, {}
        for i in range(1, n + 1):
            if i < n:
                c = Q(i - 1, 2)
            elif kind == "B":
                c = Q(n - 1, 2)
            elif kind == "C":
                c = Q(n, 2)
            else:
                c = Q(n - 2, 2)
            self.shift[i] = c
            if i < n:
                a, b = i, i + 1
            elif kind == "D":
                a, b = n - 1, n + 1
            else:
                a, b = n, n + 1
            # X(u) -> X(u - c)
            self.kappa_gen[i] = (G.hinv[a] * G.h[b]).shifted(-c)
            self.xi_plus[i] = G.f[(b, a)].shifted(-c)
            xm = G.e[(a, b)].shifted(-c)
            if i == n and kind == "C":
                xm = xm.scale(Q(1, 2))
            self.xi_minus[i] = xm


def tail_series(a):
    """``a°``: drop the constant and first-order coefficients."""
    return a.tail(2)


def transpose_prime_series(T, ctx, shift=0):
    """``T'(u + shift)`` with ``(T')_ij = theta_ij t_{j'i'}``."""
    N = ctx.N
    rows = []
    for i in range(1, N + 1):
        row = []
        for j in range(1, N + 1):
            s = T[ctx.prime(j) - 1, ctx.prime(i) - 1].shifted(shift)
            th = ctx.theta(i, j)
            row.append(s if th == 1 else s.scale(th))
        rows.append(row)
    return SeriesMatrix(T.ring, rows, T.K)


def compute_center(T, ctx):
    """``T'(u + kappa) T(u)`` as a matrix series; it should be ``z(u) * 1``."""
    return transpose_prime_series(T, ctx, ctx.kappa) * T


def compute_center_right(T, ctx):
    """``T(u) T'(u + kappa)``."""
    return T * transpose_prime_series(T, ctx, ctx.kappa)


def scalar_series_of(M):
    """Return ``z`` if the matrix series ``M`` equals ``z * 1``, else a witness dict."""
    N = M.shape[0]
    z = M[0, 0]
    for i in range(N):
        for j in range(N):
            target = z if i == j else None
            s = M[i, j]
            if target is None:
                if not s.is_zero():
                    return None, {"i": i + 1, "j": j + 1, "reason": "off-diagonal"}
            else:
                d = s.first_difference(target)
                if d is not None:
                    return None, {"i": i + 1, "j": j + 1, "order": d[0], "reason": "diagonal"}
    return z, None


def center_product_formula(G, ctx):
    """``z(u)`` written through the ``h_i`` with the shifts of the product formula."""
    n = ctx.n
    kap = ctx.kappa
    K = G.K
    z = USeries.one(G.ring, K)
    if ctx.kind == "B":
        for i in range(1, n + 1):
            z = z * G.hinv[i].shifted(kap - i)
    else:
        for i in range(1, n):
            z = z * G.hinv[i].shifted(kap - i)
    for i in range(1, n + 1):
        z = z * G.h[i].shifted(kap - i + 1)
    z = z * G.h[n + 1]
    if ctx.kind == "B":
        z = z * G.h[n + 1].shifted(Q(-1, 2))
    return z


def kappa_products(D):
    """Both sides of the two telescoping identities for the ``kappa_i``.

    ``h_1(u)^-1 h_{n+1}(u)`` is a product of shifted ``kappa_i``; and
    ``h_1(u+kappa) h_{n+1}(u)`` times a product of shifted ``kappa_i`` is the
    central series ``z(u)``.  Returns ``[(name, lhs, rhs), ...]`` where the
    right-hand sides are built from ``kappa_i`` (and ``z``) only.
    """
    G, ctx, n = D.G, D.ctx, D.n
    kind = ctx.kind
    kap = ctx.kappa
    K = G.K
    lhs1 = G.hinv[1] * G.h[n + 1]
    rhs1 = USeries.one(G.ring, K)
    last = n - 2 if kind == "D" else n - 1
    for i in range(1, last + 1):
        rhs1 = rhs1 * D.kappa_gen[i].shifted(D.shift[i])
    rhs1 = rhs1 * D.kappa_gen[n].shifted(D.shift[n])
    out = [("h1inv_hn1", lhs1, rhs1)]
    # z(u) = h_1(u+kappa) h_{n+1}(u) * prod_{i<n} kappa_i(u + kappa - (i+1)/2) [* kappa_n(u + (n-2)/2) in type B]
    prod = USeries.one(G.ring, K)
    for i in range(1, n):
        prod = prod * D.kappa_gen[i].shifted(kap - Q(i + 1, 2))
    if kind == "B":
        prod = prod * D.kappa_gen[n].shifted(Q(n - 2, 2))
    lhs2 = G.h[1].shifted(kap) * G.h[n + 1] * prod
    out.append(("z_from_kappa", lhs2, None))
    return out


def quantum_minor_A(T, rows, cols):
    """Type-A quantum minor ``sum sgn(p) t_{a_p1 b_1}(u) t_{a_p2 b_2}(u-1) ...``."""
    k = len(rows)
    acc = None
    for perm in permutations(range(k)):
        sign = _sign(perm)
        term = None
        for pos, p in enumerate(perm):
            s = T[rows[p], cols[pos]].shifted(-pos)
            term = s if term is None else term * s
        term = term if sign > 0 else -term
        acc = term if acc is None else acc + term
    return acc


def _sign(perm):
    s = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


def tau_minor(T, ctx, a1, a2, b1, b2):
    """``tau^{a1 a2}_{b1 b2}(u)``: entries of ``R_12(1) T_1(u) T_2(u-1)`` (1-based)."""
    from .rmatrix import RMatrix

    N = ctx.N
    R1 = RMatrix(ctx).at(1)
    row = (a1 - 1) * N + (a2 - 1)
    acc = None
    for (r, c), coeff in R1.data.items():
        if r != row:
            continue
        c1, c2 = divmod(c, N)
        term = (T[c1, b1 - 1] * T[c2, b2 - 1].shifted(-1)).scale(coeff)
        acc = term if acc is None else acc + term
    if acc is None:
        return USeries.zero(T.ring, T.K)
    return acc
