"""The R-matrix ``R(u) = 1 - P/u + Q/(u - kappa)`` and its exact identities."""

from .arith import ONE, ZERO, Q, RationalFunction, mpq
from .outcome import Outcome
from .tensor import RingMatrix, op_P, op_Q, place_legs

RF = RationalFunction


class RMatrix:
    """R-matrix of a context; type A drops the Q term."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.N = ctx.N
        self.P = op_P(ctx.N)
        self.Q = op_Q(ctx) if ctx.kind != "A" else RingMatrix(ctx.N ** 2, ctx.N ** 2)
        self.kappa = ctx.kappa

    @property
    def poles(self):
        if self.ctx.kind == "A":
            return (ZERO,)
        return (ZERO, self.kappa)

    def at(self, x):
        """Scalar matrix ``R(x)``; raises at a pole."""
        x = mpq(x)
        if x in self.poles:
            raise ZeroDivisionError("R(u) has a pole at u=%s" % x)
        I = RingMatrix.identity(self.N ** 2)
        out = I - self.P.scale(1 / x)
        if self.ctx.kind != "A":
            out = out + self.Q.scale(1 / (x - self.kappa))
        return out

    def cleared_at(self, x):
        """``x (x - kappa) R(x)`` (``x R(x)`` in type A), a polynomial in ``x``."""
        x = mpq(x)
        I = RingMatrix.identity(self.N ** 2)
        if self.ctx.kind == "A":
            return I.scale(x) - self.P
        k = self.kappa
        return I.scale(x * (x - k)) - self.P.scale(x - k) + self.Q.scale(x)

    @property
    def cleared_degree(self):
        return 1 if self.ctx.kind == "A" else 2

    def rf(self, shift=0):
        """``R(u + shift)`` with rational-function entries."""
        shift = mpq(shift)
        one = RF.const(1)
        zero = RF.const(0)
        out = RingMatrix.identity(self.N ** 2, one, zero)
        out = out - self.P.map(lambda a: RF.inv_linear(-shift) * a)
        if self.ctx.kind != "A":
            out = out + self.Q.map(lambda a: RF.inv_linear(self.kappa - shift) * a)
        return out


def build_R(ctx):
    return RMatrix(ctx)


def _grid(forbidden, count, start):
    pts = []
    x = start
    while len(pts) < count:
        if mpq(x) not in forbidden:
            pts.append(mpq(x))
        x += 1
    return pts


def verify_ybe(ctx):
    """Yang-Baxter equation on a product grid of rational points.

    Both sides are multiplied by the same scalar that clears every pole, so they
    become polynomial in (u, v) of degree at most ``2d`` in each variable; a
    product grid with ``2d + 1`` points per variable therefore decides the
    identity.  The grid keeps u, v and u - v away from the poles.
    """
    R = RMatrix(ctx)
    N = ctx.N
    d = R.cleared_degree
    forbidden = {ZERO, ONE, R.kappa, R.kappa + 1}
    vs = _grid(forbidden, 2 * d + 1, 11)
    us = _grid(forbidden, 2 * d + 1, 101)
    checked = 0
    for u in us:
        R13 = place_legs(R.cleared_at(u), (0, 2), 3, N)
        for v in vs:
            if u - v in forbidden:
                raise AssertionError("grid point hits a pole")
            R12 = place_legs(R.cleared_at(u - v), (0, 1), 3, N)
            R23 = place_legs(R.cleared_at(v), (1, 2), 3, N)
            lhs = R12 * R13 * R23
            rhs = R23 * R13 * R12
            checked += 1
            diff = lhs.first_difference(rhs)
            if diff is not None:
                (r, c), a, b = diff
                return Outcome(False, checked, {"u": str(u), "v": str(v), "row": r, "col": c,
                                                "lhs": str(a), "rhs": str(b)})
    return Outcome(True, checked)


def _legs(M, legs, N):
    return place_legs(M, legs, 3, N)


def fusion_projector(ctx):
    """``(1-P)/2 + Q/N`` (orthogonal) or ``(1-P)/2`` (symplectic)."""
    N = ctx.N
    P, Qm = op_P(N), op_Q(ctx)
    out = (RingMatrix.identity(N * N) - P).scale(Q(1, 2))
    if ctx.orthogonal:
        out = out + Qm.scale(Q(1, N))
    return out


def _fusion_parts(ctx):
    """Rational-function operators on three legs used by the fusion identities."""
    N = ctx.N
    one, zero = RF.const(1), RF.const(0)
    lift = lambda M: M.map(lambda a: RF.const(a))
    P, Qm = op_P(N), op_Q(ctx)
    P12, P13, P23 = (lift(_legs(P, l, N)) for l in ((0, 1), (0, 2), (1, 2)))
    Q12, Q13, Q23 = (lift(_legs(Qm, l, N)) for l in ((0, 1), (0, 2), (1, 2)))
    k = ctx.kappa
    a = RF.inv_linear(1)
    b = RF.inv_linear(k)
    if ctx.orthogonal:
        phi = RF.const(1 - Q(4, N)) * a * b
    else:
        phi = RF.inv_linear(0) * RF.inv_linear(k + 1)
    I = RingMatrix.identity(N ** 3, one, zero)
    base = I - (P13 + P23).scale(a) + (Q13 + Q23).scale(b)
    X = base - (P23 * Q12).scale(a * b) - (P13 * Q23).scale(phi)
    Y = base - (Q12 * P23).scale(a * b) - (Q23 * P13).scale(phi)
    R = RMatrix(ctx)
    R13 = _legs(R.rf(), (0, 2), N)
    R23 = _legs(R.rf(-1), (1, 2), N)
    return {"I": I, "P12": P12, "Q12": Q12, "X": X, "Y": Y, "R13": R13, "R23": R23}


def verify_fusion(ctx):
    """Fusion identities for ``R_12(1) R_13(u) R_23(u-1)`` and its mirror.

    ``R_12(1) = (1 - P_12) + Q_12/(1 - kappa)``.  Both identities are checked
    separately on the two components ``1 - P_12`` and ``Q_12``, which is
    stronger than the combined statement and stays meaningful when
    ``kappa = 1`` (N = 4 orthogonal), where ``R(1)`` itself has a pole.
    The projector identities for ``R(1)`` are checked whenever it is defined.
    """
    if ctx.kind == "A":
        raise ValueError("fusion identities are stated for types B, C, D")
    p = _fusion_parts(ctx)
    I, P12, Q12 = p["I"], p["P12"], p["Q12"]
    checked = 0
    comps = {"1-P12": I - P12, "Q12": Q12}
    for name, C in comps.items():
        lhs = C * p["R13"] * p["R23"]
        rhs = C * p["X"]
        checked += 1
        diff = lhs.first_difference(rhs)
        if diff is not None:
            return Outcome(False, checked, {"identity": "left", "component": name,
                                            "index": list(diff[0]), "lhs": repr(diff[1]), "rhs": repr(diff[2])})
        lhs = p["R23"] * p["R13"] * C
        rhs = p["Y"] * C
        checked += 1
        diff = lhs.first_difference(rhs)
        if diff is not None:
            return Outcome(False, checked, {"identity": "right", "component": name,
                                            "index": list(diff[0]), "lhs": repr(diff[1]), "rhs": repr(diff[2])})
    if ctx.kappa != 1:
        R1 = RMatrix(ctx).at(1)
        Pi = fusion_projector(ctx)
        checked += 2
        if R1 * Pi != R1 or Pi * R1 != R1:
            return Outcome(False, checked, {"identity": "projector"})
    return Outcome(True, checked)
