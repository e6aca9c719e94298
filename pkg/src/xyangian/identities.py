"""Central series, symmetries of the Gauss decomposition and reconstruction identities."""

from .arith import Q
from .gauss import (
    Drinfeld,
    GaussData,
    center_product_formula,
    compute_center,
    compute_center_right,
    kappa_products,
    scalar_series_of,
)
from .outcome import Outcome
from .relations import Case, u_outcome
from .series import USeries


def _sub_center(B, m):
    """``z^[m](u)`` from ``T^[m]`` with the unitarity constant ``kappa - m``."""
    sub = B.ctx.sub(m)
    z, wit = scalar_series_of(compute_center(B.sub_T(m), sub))
    return z, wit


def center_cases(B):
    ctx, K = B.ctx, B.K
    n, kind, kap = ctx.n, ctx.kind, ctx.kappa
    cases = []

    def add(fam, params, fn):
        cases.append(Case("center/" + fam, params, fn))

    def z_or_fail():
        z, wit = B.center
        return z, (None if z is not None else Outcome(False, 0, wit))

    def scalar():
        z, bad = z_or_fail()
        if bad:
            return bad
        if not (z.c[0] - B.ring.one()).is_zero():
            return Outcome(False, 1, {"reason": "constant term is not 1"})
        return Outcome(True, ctx.N * ctx.N * (K + 1))

    def right():
        z, bad = z_or_fail()
        if bad:
            return bad
        z2, wit = scalar_series_of(compute_center_right(B.T, ctx))
        if z2 is None:
            return Outcome(False, 0, wit)
        return u_outcome(z2, z)

    def central():
        z, bad = z_or_fail()
        if bad:
            return bad
        checked = 0
        for r in range(1, K + 1):
            for s in range(1, K + 2 - r):
                for i in range(1, ctx.N + 1):
                    for j in range(1, ctx.N + 1):
                        t = B.generator(i, j, s)
                        d = z.c[r] * t - t * z.c[r]
                        checked += 1
                        if not d.is_zero():
                            return Outcome(False, checked, {"r": r, "s": s, "i": i, "j": j, "value": repr(d)})
        return Outcome(True, checked)

    def product():
        z, bad = z_or_fail()
        if bad:
            return bad
        return u_outcome(center_product_formula(B.G, ctx), z)

    def gauss_trans():
        z, bad = z_or_fail()
        if bad:
            return bad
        G = B.G
        return u_outcome(G.h[1].shifted(kap) * G.h[ctx.N], z)

    def recurrence():
        z, bad = z_or_fail()
        if bad:
            return bad
        z1, wit = _sub_center(B, 1)
        if z1 is None:
            return Outcome(False, 0, wit)
        G = B.G
        rhs = G.hinv[1].shifted(kap - 1) * G.h[1].shifted(kap) * z1
        return u_outcome(rhs, z)

    def base_case():
        G = B.G
        if kind == "D":
            m = n - 2
            zm, wit = _sub_center(B, m)
            if zm is None:
                return Outcome(False, 0, wit)
            rhs = G.h[n - 1].shifted(1) * G.hinv[n - 1] * G.h[n] * G.h[ctx.prime(n)]
        else:
            m = n - 1
            zm, wit = _sub_center(B, m)
            if zm is None:
                return Outcome(False, 0, wit)
            if kind == "B":
                rhs = G.h[n].shifted(Q(1, 2)) * G.hinv[n].shifted(Q(-1, 2)) * G.h[n + 1] * G.h[n + 1].shifted(Q(-1, 2))
            else:
                rhs = G.h[n].shifted(2) * G.h[n + 1]
        return u_outcome(rhs, zm)

    def hiprime():
        """``h_{i'}(u)^{-1} z^[i-1](u) = h_i(u + kappa - i + 1)`` for every admissible ``i``."""
        G = B.G
        outs = []
        top = n if kind in ("B", "C") else n - 1
        for i in range(1, top + 1):
            zi, wit = (B.center if i == 1 else _sub_center(B, i - 1))
            if zi is None:
                return Outcome(False, 0, wit)
            outs.append(u_outcome(G.hinv[ctx.prime(i)] * zi, G.h[i].shifted(kap - i + 1)))
        return Outcome.merge(outs)

    def kappa_recon():
        z, bad = z_or_fail()
        if bad:
            return bad
        outs = []
        for name, lhs, rhs in kappa_products(B.D):
            outs.append(u_outcome(lhs, rhs if rhs is not None else z))
        return Outcome.merge(outs)

    add("scalar", {}, scalar)
    add("right", {}, right)
    add("central", {"max_rs": K + 1}, central)
    add("product", {}, product)
    add("h1_hN", {}, gauss_trans)
    add("hiprime", {}, hiprime)
    if n >= 2:
        add("recurrence", {}, recurrence)
    if kind != "D" or n >= 2:
        add("base", {}, base_case)
    add("kappa_reconstruction", {}, kappa_recon)
    return cases


def symmetry_cases(B):
    ctx = B.ctx
    n, kind, kap = ctx.n, ctx.kind, ctx.kappa
    p = ctx.prime
    cases = []

    def add(fam, params, fn):
        cases.append(Case("sym/" + fam, params, fn))

    def mirror(i):
        G, D = B.G, B.D
        c = kap - i
        return Outcome.merge([
            u_outcome(G.e[(p(i + 1), p(i))], -D.e[i].shifted(c)),
            u_outcome(G.f[(p(i), p(i + 1))], -D.f[i].shifted(c)),
        ])

    def mirror_B():
        G, D = B.G, B.D
        return Outcome.merge([
            u_outcome(G.e[(n + 1, n + 2)], -D.e[n].shifted(Q(-1, 2))),
            u_outcome(G.f[(n + 2, n + 1)], -D.f[n].shifted(Q(-1, 2))),
        ])

    def mirror_D():
        G, D = B.G, B.D
        return Outcome.merge([
            u_outcome(G.e[(n, p(n - 1))], -D.e[n]),
            u_outcome(G.f[(p(n - 1), n)], -D.f[n]),
        ])

    def conj(i):
        G = B.G
        h, e, f = G.h[i], G.e[(i, i + 1)], G.f[(i + 1, i)]
        return Outcome.merge([
            u_outcome(h * e, e.shifted(-1) * h),
            u_outcome(h * f.shifted(-1), f * h),
        ])

    for i in range(1, n):
        add("mirror", {"i": i}, lambda i=i: mirror(i))
    if kind == "B":
        add("mirror", {"i": n}, mirror_B)
    if kind == "D":
        add("mirror", {"i": n}, mirror_D)
    for i in range(1, n):
        add("conjugation", {"i": i}, lambda i=i: conj(i))
    return cases


def twist_cases(B):
    """Invariance of the Drinfeld series under ``T(u) -> f(u) T(u)`` and ``z -> f(u+kappa) f(u) z``."""
    from .backends import scale_matrix

    ctx = B.ctx
    n = ctx.n
    state = {}

    def build():
        if not state:
            T0, f = B.twisted()
            Tf = scale_matrix(T0, f)
            D0, Df = Drinfeld(GaussData(T0, ctx)), Drinfeld(GaussData(Tf, ctx))
            state.update(T0=T0, Tf=Tf, f=f, D0=D0, Df=Df)
        return state

    def drinfeld_invariant():
        s = build()
        D0, Df = s["D0"], s["Df"]
        outs = []
        for i in range(1, n + 1):
            outs.append(u_outcome(Df.kappa_gen[i], D0.kappa_gen[i]))
            outs.append(u_outcome(Df.xi_plus[i], D0.xi_plus[i]))
            outs.append(u_outcome(Df.xi_minus[i], D0.xi_minus[i]))
        return Outcome.merge(outs)

    def h_scaled():
        s = build()
        outs = [u_outcome(s["Df"].h[i], s["f"] * s["D0"].h[i]) for i in range(1, n + 2)]
        return Outcome.merge(outs)

    def center_scaled():
        s = build()
        z0, w0 = scalar_series_of(compute_center(s["T0"], ctx))
        zf, wf = scalar_series_of(compute_center(s["Tf"], ctx))
        if z0 is None or zf is None:
            return Outcome(False, 0, w0 or wf)
        f = s["f"]
        return u_outcome(zf, f.shifted(ctx.kappa) * f * z0)

    return [
        Case("sym/twist_drinfeld", {}, drinfeld_invariant),
        Case("sym/twist_h", {}, h_scaled),
        Case("sym/twist_center", {}, center_scaled),
    ]
