"""Relation families for Gaussian and Drinfeld-type generators.

Every relation with a ``1/(u - v - c)`` kernel is multiplied through by the
kernel polynomials and compared coefficientwise inside the window where both
sides are known exactly.  A case is a named, parameterised check that returns
an ``Outcome``; the functions here only build cases, ``runner`` executes them.
"""

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, permutations, product
from typing import Callable

from .arith import Q, mpq
from .outcome import Outcome
from .series import BiSeries, USeries, bracket_uv, kernel_poly, poly_mul


@dataclass
class Case:
    family: str
    params: dict
    run: Callable = field(repr=False)

    @property
    def id(self):
        ps = ",".join("%s=%s" % (k, self.params[k]) for k in sorted(self.params))
        return "%s[%s]" % (self.family, ps)


def bi_outcome(lhs, rhs, lo=1):
    ok, checked, wit = lhs.compare(rhs, lo)
    return Outcome(ok, checked, wit or {})


def u_outcome(lhs, rhs):
    d = lhs.first_difference(rhs)
    K = min(lhs.K, rhs.K)
    if d is None:
        return Outcome(True, K + 1)
    return Outcome(False, K + 1, {"order": d[0], "difference": repr(d[1])})


def _U(a):
    return BiSeries.in_u(a)


def _V(a):
    return BiSeries.in_v(a)


def _diff(a):
    """``a(u) - a(v)``."""
    return _U(a) - _V(a)


def _zero_bracket(a, b):
    return bi_outcome(bracket_uv(a, b), BiSeries.zero(a.ring))


UV = kernel_poly(0)


# nested commutators for Serre-type relations ----------------------------------


def serre_outcome(x, y, m, K):
    """``sum_{p in S_m} [x(u_p1), [x(u_p2), ... [x(u_pm), y(v)]]] = 0``.

    Checked on every coefficient ``u_1^-r_1 ... u_m^-r_m v^-s`` with orders in
    ``1..K``; the sum is symmetric in the ``r``'s so each multiset is done once.
    """
    memo = {}

    def nested(rs, s):
        key = (rs, s)
        if key in memo:
            return memo[key]
        if not rs:
            val = y.c[s]
        else:
            inner = nested(rs[1:], s)
            a = x.c[rs[0]]
            val = a * inner - inner * a
        memo[key] = val
        return val

    checked = 0
    for rs in combinations_with_replacement(range(1, K + 1), m):
        perms = list(permutations(rs))
        for s in range(1, K + 1):
            acc = None
            for p in perms:
                t = nested(p, s)
                acc = t if acc is None else acc + t
            checked += 1
            if not acc.is_zero():
                return Outcome(False, checked, {"orders": list(rs), "v_order": s, "value": repr(acc)})
    return Outcome(True, checked)


# type A block relations ---------------------------------------------------------


def typeA_cases(prefix, h, e, f, k, n, ea, aa, base_params=None, K=None):
    """Relations of the gl_n-type block: ``h`` for 1..n, ``e, f, k`` for 1..n-1.

    ``ea(k, j)`` is ``(eps_k, alpha_j)`` and ``aa(i, j)`` is ``(alpha_i, alpha_j)``.
    """
    bp = dict(base_params or {})
    cases = []

    def add(fam, params, fn):
        p = dict(bp)
        p.update(params)
        cases.append(Case(prefix + fam, p, fn))

    for a in range(1, n + 1):
        for b in range(a, n + 1):
            add("hihj", {"i": a, "j": b}, lambda a=a, b=b: _zero_bracket(h[a], h[b]))
    for i in range(1, n):
        for j in range(1, n):
            add("eifj", {"i": i, "j": j}, lambda i=i, j=j: _eifj(e[i], f[j], k[i] if i == j else None))
    for a in range(1, n + 1):
        for j in range(1, n):
            c = ea(a, j)
            add("hiej", {"i": a, "j": j}, lambda a=a, j=j, c=c: _hiej(h[a], e[j], c))
            add("hifj", {"i": a, "j": j}, lambda a=a, j=j, c=c: _hifj(h[a], f[j], c))
    for i in range(1, n):
        c = aa(i, i) / 2
        add("eiei", {"i": i}, lambda i=i, c=c: _eiei(e[i], c))
        add("fifi", {"i": i}, lambda i=i, c=c: _eiei(f[i], -c))
    for i in range(1, n):
        for j in range(1, n):
            if i != j and aa(i, j) == 0 and i < j:
                add("eiej0", {"i": i, "j": j}, lambda i=i, j=j: Outcome.merge([_zero_bracket(e[i], e[j]), _zero_bracket(f[i], f[j])]))
    for i in range(1, n - 1):
        j = i + 1
        add("eiej", {"i": i, "j": j}, lambda i=i, j=j: _tail_e(e[i], e[j], -aa(i, j)))
        add("fifj", {"i": i, "j": j}, lambda i=i, j=j: _tail_f(f[i], f[j], aa(i, j)))
    if K is not None:
        for i in range(1, n):
            for j in range(1, n):
                if abs(i - j) == 1:
                    add("serre_e", {"i": i, "j": j}, lambda i=i, j=j: serre_outcome(e[i], e[j], 2, K - 1))
                    add("serre_f", {"i": i, "j": j}, lambda i=i, j=j: serre_outcome(f[i], f[j], 2, K - 1))
    return cases


def _eifj(e, f, k):
    lhs = bracket_uv(e, f).mul_poly(UV)
    rhs = _diff(k) if k is not None else BiSeries.zero(e.ring)
    return bi_outcome(lhs, rhs)


def _hiej(h, e, c):
    lhs = bracket_uv(h, e).mul_poly(UV)
    rhs = (_U(h) * _diff(e)).scale(-c)
    return bi_outcome(lhs, rhs)


def _hifj(h, f, c):
    lhs = bracket_uv(h, f).mul_poly(UV)
    rhs = (_diff(f) * _U(h)).scale(c)
    return bi_outcome(lhs, rhs)


def _eiei(e, c):
    lhs = bracket_uv(e, e).mul_poly(UV)
    d = _diff(e)
    rhs = (d * d).scale(c)
    return bi_outcome(lhs, rhs)


def _tail_lhs(x, y):
    return bracket_uv(x.tail(2), y).mul_poly({(1, 0): 1}) - bracket_uv(x, y.tail(2)).mul_poly({(0, 1): 1})


def _tail_e(ei, ej, c, forward=True):
    """``u [e°_i(u), e_j(v)] - v [e_i(u), e°_j(v)] = c e_i(u) e_j(v)``.

    This is the form for ``i < j``.  Swapping the roles of ``i`` and ``j`` in
    it gives the ``i > j`` instance (``forward=False``), whose right side is
    ``c e_j(v) e_i(u)``.
    """
    prod = _U(ei) * _V(ej) if forward else _V(ej) * _U(ei)
    return bi_outcome(_tail_lhs(ei, ej), prod.scale(c))


def _tail_f(fi, fj, c, forward=True):
    """``u [f°_i(u), f_j(v)] - v [f_i(u), f°_j(v)] = c f_j(v) f_i(u)`` (reversed for ``i > j``)."""
    prod = _V(fj) * _U(fi) if forward else _U(fi) * _V(fj)
    return bi_outcome(_tail_lhs(fi, fj), prod.scale(c))


# the full presentation in terms of Gaussian generators ------------------------------


def presentation_cases(D, K):
    """Defining relations of the Drinfeld-type presentation (h_i, e_i, f_i)."""
    ctx, n, R = D.ctx, D.n, D.roots
    kind = ctx.kind
    h, e, f, k = D.h, D.e, D.f, D.k
    cases = []

    def add(fam, params, fn):
        cases.append(Case("gauss/" + fam, params, fn))

    for a in range(1, n + 2):
        for b in range(a, n + 2):
            add("hihj", {"i": a, "j": b}, lambda a=a, b=b: _zero_bracket(h[a], h[b]))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            add("eifj", {"i": i, "j": j}, lambda i=i, j=j: _eifj(e[i], f[j], k[i] if i == j else None))
    for a in range(1, n + 1):
        for j in range(1, n + 1):
            c = R.ea(a, j)
            add("hiej", {"i": a, "j": j}, lambda a=a, j=j, c=c: _hiej(h[a], e[j], c))
            add("hifj", {"i": a, "j": j}, lambda a=a, j=j, c=c: _hifj(h[a], f[j], c))
    H = h[n + 1]
    for j in range(1, n - 1):
        add("hn1ej", {"j": j}, lambda j=j: Outcome.merge([_zero_bracket(H, e[j]), _zero_bracket(H, f[j])]))
    if kind == "B":
        add("hn1en", {"n": n}, lambda: Outcome.merge([_hn1en_B(H, e[n], +1), _hn1en_B(H, f[n], -1)]))
    else:
        c = R.ea(n, n)
        add("hn1en", {"n": n}, lambda c=c: Outcome.merge([_hiej(H, e[n], -c), _hifj(H, f[n], -c)]))
    if n >= 2:
        x, y = e[n - 1], f[n - 1]
        if kind == "B":
            add("hn1en-1", {"n": n}, lambda: Outcome.merge([_zero_bracket(H, x), _zero_bracket(H, y)]))
        elif kind == "C":
            add("hn1en-1", {"n": n}, lambda: Outcome.merge([_hn1_shift_e(H, x, 2), _hn1_shift_f(H, y, 2)]))
        else:
            add("hn1en-1", {"n": n}, lambda: Outcome.merge([_hn1_shift_e(H, x, 0), _hn1_shift_f(H, y, 0)]))
    for i in range(1, n + 1):
        c = R.aa(i, i) / 2
        add("eiei", {"i": i}, lambda i=i, c=c: _eiei(e[i], c))
        add("fifi", {"i": i}, lambda i=i, c=c: _eiei(f[i], -c))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if R.aa(i, j) == 0:
                add("eiej0", {"i": i, "j": j}, lambda i=i, j=j: Outcome.merge([_zero_bracket(e[i], e[j]), _zero_bracket(f[i], f[j])]))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                c = R.aa(i, j)
                add("eiej", {"i": i, "j": j}, lambda i=i, j=j, c=c: _tail_e(e[i], e[j], -c, i < j))
                add("fifj", {"i": i, "j": j}, lambda i=i, j=j, c=c: _tail_f(f[i], f[j], c, i < j))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                m = R.serre_m(i, j)
                add("serre_e", {"i": i, "j": j, "m": m}, lambda i=i, j=j, m=m: serre_outcome(e[i], e[j], m, K - 1))
                add("serre_f", {"i": i, "j": j, "m": m}, lambda i=i, j=j, m=m: serre_outcome(f[i], f[j], m, K - 1))
    return cases


def _hn1en_B(H, x, sign):
    """Type B: ``2(u-v)(u-v-1)[H(u), x(v)]`` against the two-kernel right side.

    For ``x = e_n`` (sign +1) the right side is
    ``(u-v-1) H(u)(e(u)-e(v)) - (u-v)(e(u-1)-e(v)) H(u)``.  For ``x = f_n``
    (sign -1) it is the image of this under the transposition anti-automorphism:
    the signs flip and every product is reversed.
    """
    k1 = kernel_poly(1)
    lhs = bracket_uv(H, x).mul_poly(poly_mul(UV, k1)).scale(2)
    d1 = _diff(x)
    d2 = _U(x.shifted(-1)) - _V(x)
    if sign > 0:
        t1, t2 = _U(H) * d1, d2 * _U(H)
    else:
        t1, t2 = d1 * _U(H), _U(H) * d2
    rhs = (t1.mul_poly(k1) - t2.mul_poly(UV)).scale(sign)
    return bi_outcome(lhs, rhs)


def _hn1_shift_e(H, x, c):
    """``(u-v+c)[H(u), x(v)] = H(u)(x(v) - x(u+c))``."""
    kp = kernel_poly(-c)
    lhs = bracket_uv(H, x).mul_poly(kp)
    rhs = _U(H) * (_V(x) - _U(x.shifted(c)))
    return bi_outcome(lhs, rhs)


def _hn1_shift_f(H, y, c):
    """``(u-v+c)[H(u), y(v)] = -(y(v) - y(u+c)) H(u)``."""
    kp = kernel_poly(-c)
    lhs = bracket_uv(H, y).mul_poly(kp)
    rhs = ((_V(y) - _U(y.shifted(c))) * _U(H)).scale(-1)
    return bi_outcome(lhs, rhs)


# relations among e_{n-1}, e_n and the next root vector -----------------------------


def adjacent_root_cases(D):
    """``[e_a(u), e_n(v)]`` through ``e_{a, n+1}``, and the ``f`` form.

    The ``f`` relation is the transpose of the ``e`` one, so its quadratic
    terms are ``f_n(v) f_a(.)`` in that order.
    """
    ctx, n, G = D.ctx, D.n, D.G
    kind = ctx.kind
    e, f = D.e, D.f
    cases = []
    if n < 2:
        return cases

    def rel(a, c):
        x, en = e[a], e[n]
        E = G.e[(a, n + 1)]
        lhs_e = bracket_uv(x, en).mul_poly(UV)
        rhs_e = (_V(E) - _U(E) - _V(x) * _V(en) + _U(x) * _V(en)).scale(c)
        y, fn = f[a], f[n]
        F = G.f[(n + 1, a)]
        lhs_f = bracket_uv(y, fn).mul_poly(UV)
        rhs_f = (_U(F) - _V(F) - _V(fn) * _U(y) + _V(fn) * _V(y)).scale(c)
        return Outcome.merge([bi_outcome(lhs_e, rhs_e), bi_outcome(lhs_f, rhs_f)])

    if kind == "B":
        cases.append(Case("gauss/adjacent", {"a": n - 1}, lambda: rel(n - 1, 1)))
    elif kind == "C":
        cases.append(Case("gauss/adjacent", {"a": n - 1}, lambda: rel(n - 1, 2)))
    else:
        cases.append(Case("gauss/adjacent", {"a": n - 1, "zero": 1},
                          lambda: Outcome.merge([_zero_bracket(e[n - 1], e[n]), _zero_bracket(f[n - 1], f[n])])))
        if n >= 3:
            cases.append(Case("gauss/adjacent", {"a": n - 2}, lambda: rel(n - 2, 1)))
    return cases


def root_vector_cases(D):
    """Higher ``e_ij^(r)``, ``f_ji^(r)`` as commutators with first-order simple root vectors."""
    ctx, n, G = D.ctx, D.n, D.G
    kind = ctx.kind
    N = ctx.N
    p = ctx.prime
    K = G.K
    E, F = G.e, G.f
    e1 = {i: D.e[i].c[1] for i in D.e}
    f1 = {i: D.f[i].c[1] for i in D.f}
    rules = []  # (target_e, source_e, simple index, coefficient)
    if kind == "B":
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                rules.append(((i, j + 1), (i, j), j, 1))
                rules.append(((i, p(j)), (i, p(j) - 1), j, -1))
    elif kind == "C":
        for i in range(1, n):
            for j in range(i + 1, n):
                rules.append(((i, j + 1), (i, j), j, 1))
                rules.append(((i, p(j)), (i, p(j) - 1), j, -1))
        for i in range(1, n):
            rules.append(((i, p(n)), (i, p(n) - 1), n, Q(1, 2)))
            # exact only for r = 1; at higher orders quadratic corrections appear
            rules.append(((i, p(i)), (i, p(i) - 1), i, -1, 1))
    else:
        for i in range(1, n):
            for j in range(i + 1, n):
                rules.append(((i, j + 1), (i, j), j, 1))
                rules.append(((i, p(j)), (i, p(j) - 1), j, -1))
        for i in range(1, n - 1):
            # the root eps_i + eps_n is alpha(i..n-1) + alpha_n
            rules.append(((i, p(n)), (i, n - 1), n, 1))

    def run(tgt, src, s, c, top):
        for r in range(1, top + 1):
            x = E[src].c[r]
            lhs = E[tgt].c[r]
            rhs = (x * e1[s] - e1[s] * x).scale(c)
            d = lhs - rhs
            if not d.is_zero():
                return Outcome(False, r, {"kind": "e", "order": r, "difference": repr(d)})
            y = F[(src[1], src[0])].c[r]
            lhs = F[(tgt[1], tgt[0])].c[r]
            rhs = (f1[s] * y - y * f1[s]).scale(c)
            d = lhs - rhs
            if not d.is_zero():
                return Outcome(False, r, {"kind": "f", "order": r, "difference": repr(d)})
        return Outcome(True, 2 * top)

    cases = []
    for rule in rules:
        tgt, src, s, c = rule[:4]
        top = rule[4] if len(rule) > 4 else K
        if tgt[1] > N or src[0] >= src[1]:
            continue
        cases.append(Case("gauss/rootvec", {"i": tgt[0], "j": tgt[1], "r_max": top},
                          lambda tgt=tgt, src=src, s=s, c=c, top=top: run(tgt, src, s, c, top)))
    return cases


# block relations and their dual -----------------------------------------------------


def block_cases(D, K):
    """gl_n relations for the upper-left block and, mirrored, for the lower-right block."""
    ctx, n, G = D.ctx, D.n, D.G
    p = ctx.prime
    if n < 1:
        return []

    def ea(k, j):
        return (1 if k == j else 0) - (1 if k == j + 1 else 0)

    def aa(i, j):
        return 2 if i == j else (-1 if abs(i - j) == 1 else 0)

    h = {a: G.h[a] for a in range(1, n + 1)}
    e = {i: G.e[(i, i + 1)] for i in range(1, n)}
    f = {i: G.f[(i + 1, i)] for i in range(1, n)}
    k = {i: G.hinv[i] * G.h[i + 1] for i in range(1, n)}
    cases = typeA_cases("block/", h, e, f, k, n, ea, aa, K=K)
    # index map i -> (n - i + 1)'
    m = lambda i: p(n - i + 1)
    h2 = {a: G.h[m(a)] for a in range(1, n + 1)}
    e2 = {i: G.e[(m(i), m(i + 1))] for i in range(1, n)}
    f2 = {i: G.f[(m(i + 1), m(i))] for i in range(1, n)}
    k2 = {i: G.hinv[m(i)] * G.h[m(i + 1)] for i in range(1, n)}
    cases += typeA_cases("dual/", h2, e2, f2, k2, n, ea, aa, K=K)
    return cases


def gl_cases(G, K):
    """Type A: the gl_N relations of the full Gauss decomposition."""
    N = G.N

    def ea(k, j):
        return (1 if k == j else 0) - (1 if k == j + 1 else 0)

    def aa(i, j):
        return 2 if i == j else (-1 if abs(i - j) == 1 else 0)

    h = {a: G.h[a] for a in range(1, N + 1)}
    e = {i: G.e[(i, i + 1)] for i in range(1, N)}
    f = {i: G.f[(i + 1, i)] for i in range(1, N)}
    k = {i: G.hinv[i] * G.h[i + 1] for i in range(1, N)}
    return typeA_cases("gl/", h, e, f, k, N, ea, aa, K=K)


# the main presentation ---------------------------------------------------------------


def main_cases(D, K):
    """Relations of the shifted generators ``kappa_i(u)``, ``xi_i^+(u)``, ``xi_i^-(u)``."""
    n, R = D.n, D.roots
    kap, xp, xm = D.kappa_gen, D.xi_plus, D.xi_minus
    cases = []

    def add(fam, params, fn):
        cases.append(Case("main/" + fam, params, fn))

    for i in range(1, n + 1):
        for j in range(i, n + 1):
            add("kikj", {"i": i, "j": j}, lambda i=i, j=j: _zero_bracket(kap[i], kap[j]))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            add("xpixmj", {"i": i, "j": j}, lambda i=i, j=j: _xpxm(xp[i], xm[j], kap[i] if i == j else None))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            c = R.aa(i, j) / 2
            add("kixpj", {"i": i, "j": j, "sign": "+"}, lambda i=i, j=j, c=c: _kx(kap[i], xp[j], -c))
            add("kixpj", {"i": i, "j": j, "sign": "-"}, lambda i=i, j=j, c=c: _kx(kap[i], xm[j], c))
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            c = R.aa(i, j) / 2
            add("xpixpj", {"i": i, "j": j, "sign": "+"}, lambda i=i, j=j, c=c: _xx(xp[i], xp[j], -c))
            add("xpixpj", {"i": i, "j": j, "sign": "-"}, lambda i=i, j=j, c=c: _xx(xm[i], xm[j], c))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                m = R.serre_m(i, j)
                add("serre", {"i": i, "j": j, "m": m, "sign": "+"}, lambda i=i, j=j, m=m: serre_outcome(xp[i], xp[j], m, K - 1))
                add("serre", {"i": i, "j": j, "m": m, "sign": "-"}, lambda i=i, j=j, m=m: serre_outcome(xm[i], xm[j], m, K - 1))
    return cases


def _xpxm(xp, xm, k):
    lhs = bracket_uv(xp, xm).mul_poly(UV)
    rhs = (-_diff(k)) if k is not None else BiSeries.zero(xp.ring)
    return bi_outcome(lhs, rhs)


def _kx(k, x, c):
    """``(u-v)[k(u), x(v)] = c {k(u), x(u) - x(v)}``."""
    lhs = bracket_uv(k, x).mul_poly(UV)
    d = _diff(x)
    rhs = (_U(k) * d + d * _U(k)).scale(c)
    return bi_outcome(lhs, rhs)


def _xx(x, y, c):
    """``(u-v)([x(u), y(v)] + [y(u), x(v)]) = c {x(u)-x(v), y(u)-y(v)}``."""
    lhs = (bracket_uv(x, y) + bracket_uv(y, x)).mul_poly(UV)
    dx, dy = _diff(x), _diff(y)
    rhs = (dx * dy + dy * dx).scale(c)
    return bi_outcome(lhs, rhs)
