"""Extended Yangians as rewriting systems over the RTT generators.

Letters are integers.  Central parameters (free scalars, or a square root of
two) take the smallest ids; the generator ``t_ij^(r)`` of tensor factor
``tag`` follows, ordered lexicographically by ``(r, i, j)`` inside a factor.

For types B, C, D the elements ``t_ij^(r) + theta_ij t_{j'i'}^(r)`` are not
independent (they are central up to lower filtration terms), so only half of
the generators together with ``t_{1'1'}^(r)`` form the PBW basis.  The rest
are rewritten through the unitarity relation ``T'(u+kappa) T(u) = z(u)``.
With that choice ordered monomials in basis letters are linearly independent,
and two elements are equal exactly when their normal forms coincide.
"""

import os
import sys
from math import comb
from typing import NamedTuple

from .arith import ONE, ZERO, mpq
from .tensor import AlgebraContext

if os.environ.get("XYANGIAN_PURE_PYTHON"):
    from ._rewrite_py import Rewriter
    KERNEL = "python"
else:
    try:
        from ._rewrite import Rewriter
        KERNEL = "compiled"
    except ImportError:
        from ._rewrite_py import Rewriter
        KERNEL = "python"

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


class GenSym(NamedTuple):
    r: int
    i: int
    j: int
    tag: int = 0


def _addto(d, k, c):
    v = d.get(k, 0) + c
    if v == 0:
        d.pop(k, None)
    else:
        d[k] = v


class RTTAlgebra:
    """The algebra X(g_N) (or Y(gl_N) for type A), possibly tensored with copies of itself.

    ``tags`` copies of the algebra mutually commute.  ``params`` are names of
    central scalar letters; ``squares`` maps a parameter name to the rational
    value of its square (used for a formal square root of two).
    """

    def __init__(self, ctx, tags=1, params=(), squares=None):
        if isinstance(ctx, tuple):
            ctx = AlgebraContext(*ctx)
        self.ctx = ctx
        self.N = ctx.N
        self.T = tags
        self.params = tuple(params)
        self.P = len(self.params)
        self.squares = {self.params.index(k): mpq(v) for k, v in (squares or {}).items()}
        self.kappa = ctx.kappa
        self.rw = Rewriter(self)
        self._one = None

    def __repr__(self):
        extra = ""
        if self.T > 1:
            extra += ", tags=%d" % self.T
        if self.P:
            extra += ", params=%s" % (self.params,)
        return "RTTAlgebra(%s%s)" % (self.ctx.label, extra)

    # letters ---------------------------------------------------------------

    def encode(self, i, j, r, tag=0):
        N = self.N
        if not (1 <= i <= N and 1 <= j <= N and r >= 1 and 0 <= tag < self.T):
            raise ValueError("bad generator t_%d%d^(%d) tag %d" % (i, j, r, tag))
        return self.P + ((((r - 1) * N + (i - 1)) * N + (j - 1)) * self.T + tag)

    def decode(self, a):
        if a < self.P:
            return self.params[a]
        x, tag = divmod(a - self.P, self.T)
        x, j = divmod(x, self.N)
        r, i = divmod(x, self.N)
        return GenSym(r + 1, i + 1, j + 1, tag)

    def param_id(self, name):
        return self.params.index(name)

    def letter_name(self, a):
        g = self.decode(a)
        if isinstance(g, str):
            return g
        pre = "t" if self.T == 1 else "t[%d]" % g.tag
        sep = "," if self.N > 9 else ""
        return "%s%d%s%d^(%d)" % (pre, g.i, sep, g.j, g.r)

    def word_str(self, w):
        if not w:
            return "1"
        return "*".join(self.letter_name(a) for a in w)

    def filtration_degree(self, w):
        """``sum (r - 1)`` over the RTT letters of a word."""
        d = 0
        for a in w:
            if a >= self.P:
                d += self.decode(a).r - 1
        return d

    # the three rewriting callbacks ----------------------------------------------

    def is_basis_pair(self, i, j):
        ctx = self.ctx
        if ctx.kind == "A":
            return True
        N = self.N
        if i == N and j == N:
            return True
        if ctx.symplectic:
            return i + j <= N + 1
        return i + j < N + 1

    def is_dep(self, a):
        if a < self.P:
            return False
        g = self.decode(a)
        return not self.is_basis_pair(g.i, g.j)

    def square(self, a):
        if a < self.P and a in self.squares:
            return {(): self.squares[a]}
        return None

    def raw_comm(self, a, b):
        if a < self.P or b < self.P:
            return {}
        ga, gb = self.decode(a), self.decode(b)
        if ga.tag != gb.tag:
            return {}
        return self.commutator_words(ga.i, ga.j, ga.r, gb.i, gb.j, gb.r, ga.tag)

    def raw_dep(self, a):
        g = self.decode(a)
        return self.dependent_words(g.i, g.j, g.r, g.tag)

    # formulas ------------------------------------------------------------------

    def _t(self, i, j, r, tag):
        """``t_ij^(r)`` as a free polynomial (``t^(0) = delta``)."""
        if r == 0:
            return {(): ONE} if i == j else {}
        return {(self.encode(i, j, r, tag),): ONE}

    def _tt(self, x, y, a, b, tag, coeff, out):
        """Add ``coeff * t_x^(a) t_y^(b)`` into ``out``."""
        if coeff == 0:
            return
        if a == 0:
            if x[0] != x[1]:
                return
            if b == 0:
                if y[0] == y[1]:
                    _addto(out, (), coeff)
                return
            _addto(out, (self.encode(y[0], y[1], b, tag),), coeff)
            return
        if b == 0:
            if y[0] != y[1]:
                return
            _addto(out, (self.encode(x[0], x[1], a, tag),), coeff)
            return
        _addto(out, (self.encode(x[0], x[1], a, tag), self.encode(y[0], y[1], b, tag)), coeff)

    def commutator_words(self, i, j, r, k, l, s, tag=0):
        """Free polynomial for ``[t_ij^(r), t_kl^(s)]`` read off the defining relation.

        The kernels are expanded as ``1/(u-v) = sum v^p u^(-p-1)`` and
        ``1/(u-v-kappa) = sum (v+kappa)^p u^(-p-1)``; only ``p <= r-1`` reaches
        the coefficient of ``u^-r v^-s``.
        """
        out = {}
        for a in range(1, min(r, s) + 1):
            self._tt((k, j), (i, l), a - 1, r + s - a, tag, ONE, out)
            self._tt((k, j), (i, l), r + s - a, a - 1, tag, -ONE, out)
        if self.ctx.kind == "A":
            return out
        ctx = self.ctx
        kap = self.kappa
        di = k == ctx.prime(i)
        dj = l == ctx.prime(j)
        if not (di or dj):
            return out
        for p in range(r):
            alpha = r - 1 - p
            for q in range(p + 1):
                beta = s + q
                c = -comb(p, q) * kap ** (p - q)
                if c == 0:
                    continue
                for m in range(1, self.N + 1):
                    mp = ctx.prime(m)
                    if di:
                        self._tt((m, j), (mp, l), alpha, beta, tag, c * ctx.theta(i, m), out)
                    if dj:
                        self._tt((k, mp), (i, m), beta, alpha, tag, -c * ctx.theta(j, m), out)
        return out

    def _shifted(self, x, y, a, tag):
        """Coefficient of ``u^-a`` in ``t_xy(u + kappa)`` as a free polynomial."""
        if a == 0:
            return {(): ONE} if x == y else {}
        out = {}
        kap = self.kappa
        for c in range(1, a + 1):
            co = comb(a - 1, c - 1) * (-kap) ** (a - c)
            if co:
                _addto(out, (self.encode(x, y, c, tag),), mpq(co))
        return out

    def unitarity_words(self, k, l, r, tag=0):
        """Coefficient of ``u^-r`` in ``(T'(u+kappa) T(u))_kl`` as a free polynomial."""
        ctx = self.ctx
        out = {}
        for p in range(1, self.N + 1):
            th = ctx.theta(k, p)
            for a in range(0, r + 1):
                b = r - a
                left = self._shifted(ctx.prime(p), ctx.prime(k), a, tag)
                if not left:
                    continue
                right = self._t(p, l, b, tag)
                for w1, c1 in left.items():
                    for w2, c2 in right.items():
                        _addto(out, w1 + w2, th * c1 * c2)
        return out

    def _lower(self, k, l, r, tag):
        """``M_kl^(r) - t_kl^(r) - theta_kl t_{l'k'}^(r)``."""
        ctx = self.ctx
        out = self.unitarity_words(k, l, r, tag)
        _addto(out, (self.encode(k, l, r, tag),), -ONE)
        _addto(out, (self.encode(ctx.prime(l), ctx.prime(k), r, tag),), -mpq(ctx.theta(k, l)))
        return out

    def dependent_words(self, i, j, r, tag=0):
        """Express a non-basis generator through the unitarity relation."""
        ctx = self.ctx
        N = self.N
        out = {}
        if i != j and j != ctx.prime(i):
            k, l = ctx.prime(j), ctx.prime(i)
            th = -mpq(ctx.theta(i, j))
            _addto(out, (self.encode(k, l, r, tag),), th)
            for w, c in self._lower(k, l, r, tag).items():
                _addto(out, w, th * c)
            return out
        if i != j:
            # orthogonal t_{ii'}: 2 t + L = 0
            for w, c in self._lower(i, j, r, tag).items():
                _addto(out, w, -c / 2)
            return out
        # diagonal: M_ii = M_11
        one_p = N
        base = dict(self._lower(1, 1, r, tag))
        _addto(base, (self.encode(1, 1, r, tag),), ONE)
        _addto(base, (self.encode(one_p, one_p, r, tag),), ONE)
        if i == ctx.prime(i):
            for w, c in self._lower(i, i, r, tag).items():
                _addto(base, w, -c)
            return {w: c / 2 for w, c in base.items()}
        ip = ctx.prime(i)
        _addto(base, (self.encode(ip, ip, r, tag),), -ONE)
        for w, c in self._lower(ip, ip, r, tag).items():
            _addto(base, w, -c)
        return base

    # element construction -----------------------------------------------------

    def free(self, terms):
        return NCPoly(self, terms)

    def element(self, terms):
        return NormalForm(self, terms)

    def zero(self):
        return NormalForm(self, {})

    def one(self):
        return NormalForm(self, {(): ONE})

    def scalar(self, c):
        c = mpq(c)
        return NormalForm(self, {(): c} if c else {})

    def letter(self, i, j, r, tag=0):
        """``t_ij^(r)`` as a free polynomial (``r = 0`` gives ``delta_ij``)."""
        return NCPoly(self, self._t(i, j, r, tag))

    def t(self, i, j, r, tag=0):
        """``t_ij^(r)`` in normal form."""
        return self.letter(i, j, r, tag).normal_order()

    def param(self, name):
        return NormalForm(self, {(self.param_id(name),): ONE})

    def commutator_coeff(self, i, j, r, k, l, s, tag=0):
        """The right-hand side for ``[t_ij^(r), t_kl^(s)]`` as a free polynomial."""
        return NCPoly(self, self.commutator_words(i, j, r, k, l, s, tag))

    def normal_order(self, p):
        if isinstance(p, NormalForm):
            return p
        if isinstance(p, NCPoly):
            p = p.terms
        return NormalForm(self, self.rw.normal_order(p), _trusted=True)


class NCPoly:
    """Element of the free algebra on the letters of an ``RTTAlgebra``."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms=None):
        self.alg = alg
        self.terms = {}
        if terms:
            for k, v in terms.items():
                if v != 0:
                    self.terms[tuple(k)] = mpq(v)

    def _check(self, other):
        if other.alg is not self.alg:
            raise ValueError("elements of different algebras")

    def _lift(self, other):
        if isinstance(other, NCPoly):
            self._check(other)
            return other
        return type(self)(self.alg, {(): mpq(other)} if other else {})

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _addto(out, k, v)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c):
        c = mpq(c)
        if c == 0:
            return self._new({})
        return self._new({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            return self.scale(other)
        self._check(other)
        out = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                _addto(out, a + b, x * y)
        return NCPoly(self.alg, out)

    def __rmul__(self, other):
        return self.scale(other)

    def _new(self, terms):
        return NCPoly(self.alg, terms)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, type(ZERO))):
            other = self._lift(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.alg is other.alg and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def normal_order(self):
        return self.alg.normal_order(self)

    def scalar_part(self):
        """The rational ``c`` if this is ``c * 1``, else None."""
        if not self.terms:
            return ZERO
        if len(self.terms) == 1 and () in self.terms:
            return self.terms[()]
        return None

    def words(self):
        return list(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            c = self.terms[w]
            ws = self.alg.word_str(w)
            if ws == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(ws)
            elif c == -1:
                parts.append("-" + ws)
            else:
                parts.append("%s*%s" % (c, ws))
        return " + ".join(parts).replace("+ -", "- ")


class NormalForm(NCPoly):
    """An element of the algebra held in PBW normal form.

    Products are normal ordered immediately, so equality of elements is
    equality of term dictionaries.
    """

    __slots__ = ()

    def __init__(self, alg, terms=None, _trusted=False):
        if _trusted:
            self.alg = alg
            self.terms = terms
        else:
            NCPoly.__init__(self, alg, terms)

    def _new(self, terms):
        return NormalForm(self.alg, terms, _trusted=True)

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            return self.scale(other)
        self._check(other)
        if not isinstance(other, NormalForm):
            other = self.alg.normal_order(other)
        return NormalForm(self.alg, self.alg.rw.mul(self.terms, other.terms), _trusted=True)

    def free(self):
        return NCPoly(self.alg, self.terms)


def commutator(a, b):
    return a * b - b * a


def anticommutator(a, b):
    return a * b + b * a
