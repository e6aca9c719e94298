"""Truncated series in ``u^-1`` (and ``u^-1, v^-1``) over a noncommutative ring.

Coefficients are ring elements supporting ``+``, ``-``, ``*``, ``scale`` and
``is_zero``; the ring object supplies ``zero()``, ``one()`` and ``scalar(c)``.
A ``USeries`` of order ``K`` knows its coefficients at ``u^0 .. u^-K`` exactly.
Shifts ``u -> u + c`` and rescalings ``u -> s u`` keep that window, since the
coefficient of ``u^-m`` of ``a(u + c)`` only involves ``a_r`` with ``r <= m``.
"""

from math import comb

from .arith import ONE, ZERO, mpq

INF = 10 ** 9


class USeries:
    __slots__ = ("ring", "c")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.c = list(coeffs)

    @property
    def K(self):
        return len(self.c) - 1

    @classmethod
    def const(cls, ring, x, K):
        return cls(ring, [x] + [ring.zero() for _ in range(K)])

    @classmethod
    def one(cls, ring, K):
        return cls.const(ring, ring.one(), K)

    @classmethod
    def zero(cls, ring, K):
        return cls(ring, [ring.zero() for _ in range(K + 1)])

    def __getitem__(self, r):
        return self.c[r]

    def __add__(self, other):
        if not isinstance(other, USeries):
            other = USeries.const(self.ring, self.ring.scalar(other), self.K)
        K = min(self.K, other.K)
        return USeries(self.ring, [self.c[r] + other.c[r] for r in range(K + 1)])

    __radd__ = __add__

    def __neg__(self):
        return USeries(self.ring, [-x for x in self.c])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s):
        s = mpq(s)
        return USeries(self.ring, [x.scale(s) for x in self.c])

    def __mul__(self, other):
        if not isinstance(other, USeries):
            return self.scale(other)
        K = min(self.K, other.K)
        a, b = self.c, other.c
        out = []
        for m in range(K + 1):
            acc = None
            for k in range(m + 1):
                x, y = a[k], b[m - k]
                if x.is_zero() or y.is_zero():
                    continue
                p = x * y
                acc = p if acc is None else acc + p
            out.append(acc if acc is not None else self.ring.zero())
        return USeries(self.ring, out)

    def __rmul__(self, other):
        return self.scale(other)

    def left(self, x):
        """``x * a(u)`` for a ring element ``x``."""
        return USeries(self.ring, [x * y for y in self.c])

    def right(self, x):
        return USeries(self.ring, [y * x for y in self.c])

    def inverse(self):
        """Two-sided inverse; the constant term must be a nonzero scalar."""
        a0 = self.c[0]
        lam = scalar_value(a0)
        if lam is None or lam == 0:
            raise ValueError("series inverse needs an invertible scalar constant term")
        inv = ONE / lam
        out = [self.ring.scalar(inv)]
        for m in range(1, self.K + 1):
            acc = self.ring.zero()
            for k in range(1, m + 1):
                if self.c[k].is_zero() or out[m - k].is_zero():
                    continue
                acc = acc + self.c[k] * out[m - k]
            out.append(acc.scale(-inv))
        return USeries(self.ring, out)

    def shifted(self, c):
        """``a(u + c)``."""
        c = mpq(c)
        if c == 0:
            return self
        K = self.K
        out = [self.c[0]] + [self.ring.zero() for _ in range(K)]
        for r in range(1, K + 1):
            x = self.c[r]
            if x.is_zero():
                continue
            for m in range(0, K - r + 1):
                co = comb(r - 1 + m, m) * (-c) ** m
                if co:
                    out[r + m] = out[r + m] + x.scale(co)
        return USeries(self.ring, out)

    def scale_var(self, s):
        """``a(s u)``."""
        s = mpq(s)
        return USeries(self.ring, [x.scale(s ** (-r)) if r else x for r, x in enumerate(self.c)])

    def tail(self, k):
        """Keep only the coefficients of order ``>= k``."""
        return USeries(self.ring, [x if r >= k else self.ring.zero() for r, x in enumerate(self.c)])

    def truncate(self, K):
        return USeries(self.ring, self.c[: K + 1])

    def map(self, f, ring=None):
        return USeries(ring or self.ring, [f(x) for x in self.c])

    def is_zero(self):
        return all(x.is_zero() for x in self.c)

    def __eq__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        K = min(self.K, other.K)
        return all((self.c[r] - other.c[r]).is_zero() for r in range(K + 1))

    def first_difference(self, other):
        K = min(self.K, other.K)
        for r in range(K + 1):
            d = self.c[r] - other.c[r]
            if not d.is_zero():
                return r, d
        return None

    def __repr__(self):
        return "USeries(%s)" % ", ".join(repr(x) for x in self.c)


def series_shift(a, c):
    """``a(u - c)``."""
    return a.shifted(-mpq(c))


def scalar_value(x):
    """If ``x`` is a rational multiple of the identity return that rational."""
    f = getattr(x, "scalar_part", None)
    if f is not None:
        return f()
    return None


def divided_difference(a, K=None):
    """``(a(u) - a(v)) / (u - v)`` as a bi-series (exact, no clearing)."""
    K = a.K if K is None else K
    out = {}
    for r in range(1, K + 1):
        x = a.c[r]
        if x.is_zero():
            continue
        # (u^-r - v^-r)/(u - v) = - sum_{p+q=r+1, p,q>=1} u^-p v^-q
        for p in range(1, r + 1):
            q = r + 1 - p
            key = (p, q)
            out[key] = out[key] - x if key in out else -x
    k = (K + 1) // 2
    return BiSeries(a.ring, out, k, k)


class BiSeries:
    """Series in ``u^-1`` and ``v^-1``; key ``(a, b)`` is the coefficient of ``u^-a v^-b``.

    Coefficients with ``a <= ku`` and ``b <= kv`` are exact; negative keys hold
    positive powers created by multiplying with polynomials in ``u``, ``v``.
    """

    __slots__ = ("ring", "d", "ku", "kv")

    def __init__(self, ring, d, ku, kv):
        self.ring = ring
        self.d = {k: v for k, v in d.items() if not v.is_zero()}
        self.ku = ku
        self.kv = kv

    @classmethod
    def in_u(cls, a):
        return cls(a.ring, {(r, 0): x for r, x in enumerate(a.c)}, a.K, INF)

    @classmethod
    def in_v(cls, a):
        return cls(a.ring, {(0, r): x for r, x in enumerate(a.c)}, INF, a.K)

    @classmethod
    def zero(cls, ring, ku=INF, kv=INF):
        return cls(ring, {}, ku, kv)

    def __add__(self, other):
        out = dict(self.d)
        for k, v in other.d.items():
            out[k] = out[k] + v if k in out else v
        return BiSeries(self.ring, out, min(self.ku, other.ku), min(self.kv, other.kv))

    def __neg__(self):
        return BiSeries(self.ring, {k: -v for k, v in self.d.items()}, self.ku, self.kv)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        s = mpq(s)
        return BiSeries(self.ring, {k: v.scale(s) for k, v in self.d.items()}, self.ku, self.kv)

    def __mul__(self, other):
        if not isinstance(other, BiSeries):
            return self.scale(other)
        ku = min(self.ku, other.ku)
        kv = min(self.kv, other.kv)
        for (a, b) in list(self.d) + list(other.d):
            if a < 0 or b < 0:
                raise ValueError("bi-series product with positive powers is not supported")
        out = {}
        for (a1, b1), x in self.d.items():
            if a1 > ku or b1 > kv:
                continue
            for (a2, b2), y in other.d.items():
                a, b = a1 + a2, b1 + b2
                if a > ku or b > kv:
                    continue
                p = x * y
                k = (a, b)
                out[k] = out[k] + p if k in out else p
        return BiSeries(self.ring, out, ku, kv)

    def __rmul__(self, other):
        return self.scale(other)

    def mul_poly(self, poly):
        """Multiply by ``sum c u^du v^dv`` given as ``{(du, dv): c}``."""
        out = {}
        mu = max(du for du, _ in poly)
        mv = max(dv for _, dv in poly)
        for (du, dv), c in poly.items():
            c = mpq(c)
            if c == 0:
                continue
            for (a, b), x in self.d.items():
                k = (a - du, b - dv)
                y = x.scale(c)
                out[k] = out[k] + y if k in out else y
        return BiSeries(self.ring, out, self.ku - mu, self.kv - mv)

    def window(self, ku=None, kv=None):
        ku = self.ku if ku is None else ku
        kv = self.kv if kv is None else kv
        return {k: v for k, v in self.d.items() if k[0] <= ku and k[1] <= kv}

    def compare(self, other, lo=1):
        """Coefficientwise comparison inside the common exact window.

        Returns ``(ok, checked, witness)``; ``checked`` counts the exponent pairs
        ``lo <= a <= ku, lo <= b <= kv`` that were compared, and every stored
        key within the window (including positive powers) is compared as well.
        """
        ku = min(self.ku, other.ku)
        kv = min(self.kv, other.kv)
        stored = list(self.d) + list(other.d)
        if ku >= INF:
            ku = max([k[0] for k in stored] + [0])
        if kv >= INF:
            kv = max([k[1] for k in stored] + [0])
        keys = set(k for k in self.d if k[0] <= ku and k[1] <= kv)
        keys |= set(k for k in other.d if k[0] <= ku and k[1] <= kv)
        for a in range(lo, ku + 1):
            for b in range(lo, kv + 1):
                keys.add((a, b))
        zero = self.ring.zero()
        for k in sorted(keys):
            x = self.d.get(k, zero)
            y = other.d.get(k, zero)
            d = x - y
            if not d.is_zero():
                return False, len(keys), {"u_order": k[0], "v_order": k[1], "difference": repr(d)}
        return True, len(keys), None


def uv(*factors):
    """Ordered product of series each tagged with its variable.

    ``uv((a, 'u'), (b, 'v'))`` is ``a(u) b(v)``; factors in the same variable are
    multiplied as series first when adjacent.
    """
    acc = None
    for s, var in factors:
        if isinstance(s, BiSeries):
            b = s
        else:
            b = BiSeries.in_u(s) if var == "u" else BiSeries.in_v(s)
        acc = b if acc is None else acc * b
    return acc


def bracket_uv(a, b):
    """``[a(u), b(v)]`` as a bi-series."""
    A, B = BiSeries.in_u(a), BiSeries.in_v(b)
    return A * B - B * A


def anti_uv(a, b):
    A, B = BiSeries.in_u(a), BiSeries.in_v(b)
    return A * B + B * A


U_MINUS_V = {(1, 0): 1, (0, 1): -1}


def kernel_poly(c=0):
    """``u - v - c`` as a polynomial dict."""
    p = {(1, 0): 1, (0, 1): -1}
    if c:
        p[(0, 0)] = -mpq(c)
    return p


def poly_mul(p, q):
    out = {}
    for (a, b), x in p.items():
        for (c, d), y in q.items():
            k = (a + c, b + d)
            out[k] = out.get(k, 0) + mpq(x) * mpq(y)
    return {k: v for k, v in out.items() if v != 0}


# matrices of series ------------------------------------------------------------


class SeriesMatrix:
    """Square or rectangular matrix whose entries are ``USeries`` (0-based)."""

    def __init__(self, ring, rows, K):
        self.ring = ring
        self.rows = rows
        self.K = K

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def sub(self, rows, cols):
        return SeriesMatrix(self.ring, [[self.rows[i][j] for j in cols] for i in rows], self.K)

    def coeff_matrix(self, r):
        return [[s.c[r] for s in row] for row in self.rows]

    def __mul__(self, other):
        n, m = self.shape
        m2, p = other.shape
        assert m == m2
        out = []
        for i in range(n):
            row = []
            for j in range(p):
                acc = None
                for k in range(m):
                    t = self.rows[i][k] * other.rows[k][j]
                    acc = t if acc is None else acc + t
                row.append(acc)
            out.append(row)
        return SeriesMatrix(self.ring, out, self.K)

    def inverse(self):
        """Inverse of a square matrix series whose constant term is the identity."""
        n, m = self.shape
        assert n == m
        ring, K = self.ring, self.K
        zero = ring.zero()
        A = [self.coeff_matrix(r) for r in range(K + 1)]
        for i in range(n):
            for j in range(n):
                s = scalar_value(A[0][i][j])
                if s != (1 if i == j else 0):
                    raise ValueError("matrix series inverse needs identity constant term")
        B = [[[ring.one() if i == j else zero for j in range(n)] for i in range(n)]]
        for mdeg in range(1, K + 1):
            acc = [[zero for _ in range(n)] for _ in range(n)]
            for k in range(1, mdeg + 1):
                Ak, Bm = A[k], B[mdeg - k]
                for i in range(n):
                    for l in range(n):
                        a = Ak[i][l]
                        if a.is_zero():
                            continue
                        for j in range(n):
                            b = Bm[l][j]
                            if b.is_zero():
                                continue
                            acc[i][j] = acc[i][j] + a * b
            B.append([[-x for x in row] for row in acc])
        rows = [[USeries(ring, [B[r][i][j] for r in range(K + 1)]) for j in range(n)] for i in range(n)]
        return SeriesMatrix(ring, rows, K)
