"""Index conventions, sparse ring matrices and tensor-leg placement."""

from dataclasses import dataclass, field
from functools import cached_property

from .arith import ONE, ZERO, Q, mpq

TYPES = ("A", "B", "C", "D")


class ContextError(ValueError):
    pass


@dataclass(frozen=True)
class AlgebraContext:
    """Which extended Yangian we work in.

    ``kind`` is one of A, B, C, D.  B and D are orthogonal, C is symplectic and
    A is the Yangian of gl_N.  Small sizes (used for subalgebras) are allowed;
    root data is only available for genuine B_n (n>=1), C_n (n>=1), D_n (n>=2).
    """

    kind: str
    N: int
    _extra: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if self.kind not in TYPES:
            raise ContextError("unknown type %r (expected one of A, B, C, D)" % (self.kind,))
        N = self.N
        if not isinstance(N, int) or N < 1:
            raise ContextError("N must be a positive integer")
        if self.kind == "B" and N % 2 == 0:
            raise ContextError("type B needs odd N")
        if self.kind in ("C", "D") and N % 2 == 1:
            raise ContextError("type %s needs even N" % self.kind)

    @classmethod
    def of(cls, kind, n):
        """Context from the rank ``n`` (``N = 2n+1`` for B, ``2n`` for C and D, ``n`` for A)."""
        if kind == "B":
            return cls("B", 2 * n + 1)
        if kind in ("C", "D"):
            return cls(kind, 2 * n)
        if kind == "A":
            return cls("A", n)
        raise ContextError("unknown type %r (expected one of A, B, C, D)" % (kind,))

    @property
    def n(self):
        return self.N if self.kind == "A" else self.N // 2

    @property
    def orthogonal(self):
        return self.kind in ("B", "D")

    @property
    def symplectic(self):
        return self.kind == "C"

    @cached_property
    def kappa(self):
        if self.kind == "A":
            return ZERO
        if self.symplectic:
            return Q(self.N, 2) + 1
        return Q(self.N, 2) - 1

    @property
    def label(self):
        if self.kind == "A":
            return "A(N=%d)" % self.N
        return "%s%d(N=%d)" % (self.kind, self.n, self.N)

    def prime(self, i):
        return self.N - i + 1

    def eps(self, i):
        if self.symplectic:
            return 1 if i <= self.n else -1
        return 1

    def theta(self, i, j):
        return self.eps(i) * self.eps(j)

    def sub(self, m):
        """Context of the algebra on indices ``m+1 .. (m+1)'`` (``N - 2m``)."""
        if self.kind == "A":
            if m >= self.N:
                raise ContextError("subalgebra too small")
            return AlgebraContext("A", self.N - m)
        if 2 * m >= self.N:
            raise ContextError("subalgebra too small")
        return AlgebraContext(self.kind, self.N - 2 * m)

    def indices(self):
        return range(1, self.N + 1)


class RingMatrix:
    """Sparse matrix over any ring whose elements support +, -, * and ``== 0``.

    Entries live in a dict keyed by 0-based ``(row, col)``; absent entries are
    zero.  ``zero`` is the additive identity used when reading entries.
    """

    __slots__ = ("rows", "cols", "data", "zero")

    def __init__(self, rows, cols, data=None, zero=ZERO):
        self.rows = rows
        self.cols = cols
        self.zero = zero
        self.data = {}
        if data:
            for k, v in data.items():
                if not _is_zero(v):
                    self.data[k] = v

    @classmethod
    def identity(cls, n, one=ONE, zero=ZERO):
        return cls(n, n, {(i, i): one for i in range(n)}, zero)

    @classmethod
    def from_rows(cls, rows, zero=ZERO):
        r = len(rows)
        c = len(rows[0]) if r else 0
        return cls(r, c, {(i, j): rows[i][j] for i in range(r) for j in range(c)}, zero)

    def __getitem__(self, key):
        return self.data.get(key, self.zero)

    def __setitem__(self, key, value):
        if _is_zero(value):
            self.data.pop(key, None)
        else:
            self.data[key] = value

    def copy(self):
        m = RingMatrix(self.rows, self.cols, None, self.zero)
        m.data = dict(self.data)
        return m

    def to_rows(self):
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def map(self, f):
        return RingMatrix(self.rows, self.cols, {k: f(v) for k, v in self.data.items()}, self.zero)

    def __add__(self, other):
        out = dict(self.data)
        for k, v in other.data.items():
            if k in out:
                out[k] = out[k] + v
            else:
                out[k] = v
        return RingMatrix(self.rows, self.cols, out, self.zero)

    def __neg__(self):
        return self.map(lambda x: -x)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return self.map(lambda x: x * s)

    def __mul__(self, other):
        if not isinstance(other, RingMatrix):
            return self.scale(other)
        if self.cols != other.rows:
            raise ValueError("shape mismatch %dx%d * %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        by_row = {}
        for (i, k), v in other.data.items():
            by_row.setdefault(i, []).append((k, v))
        out = {}
        for (i, j), a in self.data.items():
            row = by_row.get(j)
            if not row:
                continue
            for k, b in row:
                key = (i, k)
                if key in out:
                    out[key] = out[key] + a * b
                else:
                    out[key] = a * b
        return RingMatrix(self.rows, other.cols, out, self.zero)

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return not (self - other).data

    def is_zero(self):
        return not self.data

    def nonzero_count(self):
        return len(self.data)

    def first_difference(self, other):
        """Smallest index where the two matrices differ, or None."""
        d = (self - other).data
        if not d:
            return None
        k = min(d)
        return k, self[k], other[k]


def _is_zero(v):
    if isinstance(v, (int, type(ZERO))):
        return v == 0
    z = getattr(v, "is_zero", None)
    if z is not None:
        return z()
    return v == 0


def op_P(N, one=ONE, zero=ZERO):
    """Permutation operator ``sum e_ij (x) e_ji`` on C^N (x) C^N."""
    data = {}
    for i in range(N):
        for j in range(N):
            data[(i * N + j, j * N + i)] = one
    return RingMatrix(N * N, N * N, data, zero)


def op_Q(ctx, one=ONE, zero=ZERO):
    """``sum theta_ij e_ij (x) e_i'j'``; the transposed permutation."""
    N = ctx.N
    data = {}
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            ip, jp = ctx.prime(i), ctx.prime(j)
            data[((i - 1) * N + ip - 1, (j - 1) * N + jp - 1)] = one * ctx.theta(i, j)
    return RingMatrix(N * N, N * N, data, zero)


def _digits(x, N, L):
    d = [0] * L
    for k in range(L - 1, -1, -1):
        x, d[k] = divmod(x, N)
    return d


def _undigits(d, N):
    x = 0
    for a in d:
        x = x * N + a
    return x


def place_legs(X, legs, total, N):
    """Embed an operator on ``len(legs)`` tensor legs into ``total`` legs.

    ``legs`` are 0-based leg positions in the order of the tensor factors of
    ``X``; the Kronecker layout is leg-1-major throughout.
    """
    k = len(legs)
    if X.rows != N ** k:
        raise ValueError("operator size does not match leg count")
    others = [p for p in range(total) if p not in legs]
    out = {}
    nother = N ** len(others)
    for (r, c), v in X.data.items():
        rd = _digits(r, N, k)
        cd = _digits(c, N, k)
        for m in range(nother):
            md = _digits(m, N, len(others))
            row = [0] * total
            col = [0] * total
            for pos, a, b in zip(legs, rd, cd):
                row[pos] = a
                col[pos] = b
            for pos, a in zip(others, md):
                row[pos] = a
                col[pos] = a
            out[(_undigits(row, N), _undigits(col, N))] = v
    return RingMatrix(N ** total, N ** total, out, X.zero)


def kron(A, B):
    """Kronecker product ``A (x) B``."""
    out = {}
    for (i, j), a in A.data.items():
        for (k, l), b in B.data.items():
            out[(i * B.rows + k, j * B.cols + l)] = a * b
    return RingMatrix(A.rows * B.rows, A.cols * B.cols, out, A.zero)


def transpose_prime(ctx, X):
    """``(X')_ij = theta_ij X_{j'i'}`` for an N x N ring matrix (1-based indices inside)."""
    N = ctx.N
    out = {}
    for (r, c), v in X.data.items():
        i, j = ctx.prime(c + 1), ctx.prime(r + 1)
        out[(i - 1, j - 1)] = v * ctx.theta(i, j)
    return RingMatrix(N, N, out, X.zero)


def lie_generator_F(ctx, i, j):
    """``F_ij = E_ij - theta_ij E_{j'i'}`` as an N x N rational matrix."""
    m = RingMatrix(ctx.N, ctx.N)
    m[i - 1, j - 1] = m[i - 1, j - 1] + ONE
    a, b = ctx.prime(j), ctx.prime(i)
    m[a - 1, b - 1] = m[a - 1, b - 1] - ctx.theta(i, j)
    return m


def matrix_unit(N, i, j):
    return RingMatrix(N, N, {(i - 1, j - 1): ONE})


class RootData:
    """Simple roots of B_n, C_n, D_n in the basis eps_1..eps_n."""

    def __init__(self, ctx):
        if ctx.kind == "A":
            raise ContextError("root data is defined for types B, C, D")
        n = ctx.n
        if n < 1 or (ctx.kind == "D" and n < 2):
            raise ContextError("rank too small for type %s" % ctx.kind)
        self.ctx = ctx
        self.n = n

    def eps_vec(self, i):
        return tuple(ONE if k == i else ZERO for k in range(1, self.n + 1))

    def alpha(self, i):
        n, kind = self.n, self.ctx.kind
        if not 1 <= i <= n:
            raise IndexError(i)
        v = [ZERO] * n
        if i < n:
            v[i - 1], v[i] = ONE, -ONE
        elif kind == "B":
            v[n - 1] = ONE
        elif kind == "C":
            v[n - 1] = mpq(2)
        else:
            v[n - 2], v[n - 1] = ONE, ONE
        return tuple(v)

    @staticmethod
    def inner(x, y):
        return sum((a * b for a, b in zip(x, y)), ZERO)

    def ea(self, i, j):
        """``(eps_i, alpha_j)``."""
        return self.inner(self.eps_vec(i), self.alpha(j))

    def aa(self, i, j):
        """``(alpha_i, alpha_j)``."""
        return self.inner(self.alpha(i), self.alpha(j))

    def cartan(self, i, j):
        return 2 * self.aa(i, j) / self.aa(i, i)

    def serre_m(self, i, j):
        return int(1 - self.cartan(i, j))
