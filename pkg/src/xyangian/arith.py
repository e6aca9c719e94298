"""Exact scalar arithmetic: rationals, univariate polynomials and rational functions.

Rationals are gmpy2 ``mpq`` values.  Polynomials are immutable tuples of
coefficients (constant term first).  Rational functions are kept reduced with
a monic denominator, so structural equality is mathematical equality.
"""

from math import comb

from gmpy2 import mpq

Rational = mpq
ZERO = mpq(0)
ONE = mpq(1)


def Q(x, d=None):
    """Coerce ``x`` (int, str, Fraction, mpq) or ``x/d`` to an exact rational."""
    if d is not None:
        return mpq(x, d)
    if isinstance(x, str):
        return mpq(x)
    return mpq(x)


class Poly:
    """Dense univariate polynomial over Q in the variable ``u``."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        c = [mpq(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def _raw(cls, c):
        p = object.__new__(cls)
        c = list(c)
        while c and c[-1] == 0:
            c.pop()
        p.c = tuple(c)
        return p

    @classmethod
    def const(cls, a):
        return cls((a,))

    @classmethod
    def linear(cls, root):
        """The monic polynomial ``u - root``."""
        return cls((-mpq(root), 1))

    @property
    def degree(self):
        return len(self.c) - 1

    def is_zero(self):
        return not self.c

    def lead(self):
        return self.c[-1] if self.c else ZERO

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return "Poly(%s)" % (list(map(str, self.c)),)

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for k in range(len(self.c) - 1, -1, -1):
            a = self.c[k]
            if a == 0:
                continue
            mono = "" if k == 0 else ("u" if k == 1 else "u^%d" % k)
            if mono and a == 1:
                parts.append(mono)
            elif mono and a == -1:
                parts.append("-" + mono)
            else:
                parts.append(str(a) + ("*" + mono if mono else ""))
        return " + ".join(parts).replace("+ -", "- ")

    def __neg__(self):
        return Poly._raw(-a for a in self.c)

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, x in enumerate(b):
            out[k] += x
        return Poly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            s = mpq(other)
            return Poly._raw(a * s for a in self.c)
        a, b = self.c, other.c
        if not a or not b:
            return Poly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Poly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x):
        acc = ZERO
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def divmod(self, other):
        if not other.c:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        db = len(other.c) - 1
        lb = other.c[-1]
        if len(r) - 1 < db:
            return Poly(), self
        q = [ZERO] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            f = r[k + db] / lb
            q[k] = f
            if f:
                for j, y in enumerate(other.c):
                    r[k + j] -= f * y
        return Poly._raw(q), Poly._raw(r[:db])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if not self.c:
            return self
        l = self.c[-1]
        if l == 1:
            return self
        return Poly._raw(a / l for a in self.c)

    def shift(self, c):
        """Return ``p(u + c)``."""
        out = [ZERO] * len(self.c)
        c = mpq(c)
        for k, a in enumerate(self.c):
            if a == 0:
                continue
            for m in range(k + 1):
                out[m] += a * comb(k, m) * c ** (k - m)
        return Poly._raw(out)

    def scale_var(self, s):
        """Return ``p(s*u)``."""
        s = mpq(s)
        return Poly._raw(a * s ** k for k, a in enumerate(self.c))


def poly_gcd(a, b):
    """Monic gcd (zero if both vanish)."""
    while b.c:
        a, b = b, a % b
    return a.monic()


U = Poly((0, 1))


class RationalFunction:
    """Element of Q(u) stored as a reduced fraction with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if den is None:
            den = Poly.const(1)
        elif not isinstance(den, Poly):
            den = Poly.const(den)
        if not den.c:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if not num.c:
                den = Poly.const(1)
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num // g
                    den = den // g
                l = den.c[-1]
                if l != 1:
                    num = num * (1 / l)
                    den = den * (1 / l)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, a):
        return cls(Poly.const(a), None, _reduced=True)

    @classmethod
    def u(cls):
        return cls(U, None, _reduced=True)

    @classmethod
    def inv_linear(cls, root):
        """``1/(u - root)``."""
        return cls(Poly.const(1), Poly.linear(root), _reduced=True)

    def is_zero(self):
        return not self.num.c

    def is_const(self):
        return self.den.degree == 0 and self.num.degree <= 0

    def __bool__(self):
        return bool(self.num.c)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction.const(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den.degree == 0:
            return "RF(%s)" % self.num
        return "RF((%s)/(%s))" % (self.num, self.den)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction(other, None, _reduced=True)
        return RationalFunction.const(other)

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __add__(self, other):
        other = self._coerce(other)
        if not other.num.c:
            return self
        if not self.num.c:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        if g.degree == 0:
            return RationalFunction(
                self.num * other.den + other.num * self.den, self.den * other.den
            )
        a = other.den // g
        b = self.den // g
        return RationalFunction(self.num * a + other.num * b, self.den * a)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (RationalFunction, Poly)):
            s = mpq(other)
            if s == 0:
                return RationalFunction.const(0)
            return RationalFunction(self.num * s, self.den, _reduced=True)
        other = self._coerce(other)
        if not self.num.c or not other.num.c:
            return RationalFunction.const(0)
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1, d2 = (self.num // g1, other.den // g1) if g1.degree > 0 else (self.num, other.den)
        n2, d1 = (other.num // g2, self.den // g2) if g2.degree > 0 else (other.num, self.den)
        num = n1 * n2
        den = d1 * d2
        l = den.c[-1]
        if l != 1:
            num = num * (1 / l)
            den = den * (1 / l)
        return RationalFunction(num, den, _reduced=True)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num.c:
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("pole at %s" % x)
        return self.num(x) / d

    def shift(self, c):
        """Return ``f(u + c)``."""
        return RationalFunction(self.num.shift(c), self.den.shift(c))

    def scale_var(self, s):
        """Return ``f(s*u)``."""
        return RationalFunction(self.num.scale_var(s), self.den.scale_var(s))


def substitute_shift(f, c):
    """``f(u) -> f(u + c)`` for polynomials and rational functions."""
    return f.shift(c)


def expand_at_infinity(f, order):
    """Coefficients ``[a_0, a_1, ..., a_order]`` with ``f = sum_r a_r u^{-r}``.

    Requires ``f`` to be regular at infinity (``deg num <= deg den``).
    """
    if isinstance(f, Poly):
        f = RationalFunction(f)
    n, d = f.num.c, f.den.c
    dn, dd = len(n) - 1, len(d) - 1
    if not n:
        return [ZERO] * (order + 1)
    if dn > dd:
        raise ValueError("rational function has a pole at infinity")
    # write num/den in x = 1/u: num(u) = u^dd * N(x), den(u) = u^dd * D(x)
    N = [n[dd - k] if 0 <= dd - k < len(n) else ZERO for k in range(order + 1)]
    D = [d[dd - k] if 0 <= dd - k else ZERO for k in range(dd + 1)]
    out = []
    d0 = D[0]
    for k in range(order + 1):
        s = N[k]
        for j in range(1, min(k, dd) + 1):
            s -= D[j] * out[k - j]
        out.append(s / d0)
    return out


def binomial(n, k):
    """Generalised binomial coefficient ``C(n, k)`` for rational ``n``."""
    if k < 0:
        return ZERO
    out = ONE
    for i in range(k):
        out = out * (n - i) / (i + 1)
    return out


def inverse_power_shift(r, c, order):
    """Coefficients of ``(u - c)^{-r}`` in powers ``u^{-r-m}``, ``m = 0..order-r``.

    Returns a dict ``{r + m: C(r-1+m, m) c^m}``.
    """
    c = mpq(c)
    out = {}
    for m in range(0, order - r + 1):
        out[r + m] = comb(r - 1 + m, m) * c ** m
    return out
