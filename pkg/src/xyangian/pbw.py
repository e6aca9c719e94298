"""Property checks for the normal-ordering engine and its soundness on the oracle."""

import random
from itertools import product

from .algebra import RTTAlgebra, commutator
from .oracle import EvalMap
from .outcome import Outcome
from .relations import Case

JACOBI_TRIPLES = 100
RANDOM_WORDS = 60


def _letters(alg, rmax):
    N = alg.N
    return [alg.encode(i, j, r) for r in range(1, rmax + 1)
            for i in range(1, N + 1) for j in range(1, N + 1)]


def is_normal_word(alg, w):
    """Weakly increasing, basis letters only, no rewritable squares."""
    for a, b in zip(w, w[1:]):
        if a > b or (a == b and alg.square(a) is not None):
            return False
    return not any(alg.is_dep(a) for a in w)


def check_termination(alg, rng, rmax=3, count=RANDOM_WORDS, length=4):
    """Random words reach a normal form without raising their filtration degree."""
    letters = _letters(alg, rmax)
    checked = 0
    for _ in range(count):
        w = tuple(rng.choice(letters) for _ in range(rng.randint(1, length)))
        try:
            nf = alg.normal_order({w: 1})
        except RecursionError:
            return Outcome(False, checked, {"word": alg.word_str(w), "reason": "no termination"})
        checked += 1
        deg = alg.filtration_degree(w)
        for v in nf.terms:
            if not is_normal_word(alg, v):
                return Outcome(False, checked, {"word": alg.word_str(w), "reason": "not normal", "term": alg.word_str(v)})
            if alg.filtration_degree(v) > deg:
                return Outcome(False, checked, {"word": alg.word_str(w), "reason": "degree raised", "term": alg.word_str(v)})
    return Outcome(True, checked)


def check_idempotence(alg, rng, rmax=3, count=RANDOM_WORDS, length=4):
    letters = _letters(alg, rmax)
    checked = 0
    for _ in range(count):
        w = tuple(rng.choice(letters) for _ in range(rng.randint(1, length)))
        nf = alg.normal_order({w: 1})
        again = alg.normal_order(nf.free())
        checked += 1
        if again.terms != nf.terms:
            return Outcome(False, checked, {"word": alg.word_str(w)})
    return Outcome(True, checked)


def check_jacobi(alg, rng, rmax=3, count=JACOBI_TRIPLES):
    N = alg.N
    gens = [(i, j, r) for r in range(1, rmax + 1) for i in range(1, N + 1) for j in range(1, N + 1)]
    checked = 0
    for _ in range(count):
        x, y, z = (alg.t(*rng.choice(gens)) for _ in range(3))
        total = commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y))
        checked += 1
        if not total.is_zero():
            return Outcome(False, checked, {"x": repr(x), "y": repr(y), "z": repr(z), "sum": repr(total)})
    return Outcome(True, checked)


def check_degree_drop(alg, rmax=3):
    """Correction terms sit strictly below the product in (filtration degree, length).

    Quadratic terms of ``[t_ij^(r), t_kl^(s)]`` have degree at most ``r+s-3``;
    the only terms of degree ``r+s-2`` are single generators coming from
    ``t^(0) = delta``.  Dependent letters rewrite to their partner letter plus
    terms of lower degree.
    """
    N = alg.N
    checked = 0
    idx = range(1, N + 1)
    for r, s in product(range(1, rmax + 1), repeat=2):
        top = r + s - 2
        for i, j, k, l in product(idx, repeat=4):
            for w in alg.commutator_words(i, j, r, k, l, s):
                d = alg.filtration_degree(w)
                checked += 1
                if not (d < top or (d == top and len(w) == 1)):
                    return Outcome(False, checked, {"pair": [i, j, r, k, l, s], "term": alg.word_str(w), "degree": d})
    if alg.ctx.kind != "A":
        for r in range(1, rmax + 1):
            for i, j in product(idx, repeat=2):
                a = alg.encode(i, j, r)
                if not alg.is_dep(a):
                    continue
                for w in alg.raw_dep(a):
                    d = alg.filtration_degree(w)
                    checked += 1
                    if not (d < r - 1 or (d == r - 1 and len(w) == 1)):
                        return Outcome(False, checked, {"letter": alg.letter_name(a), "term": alg.word_str(w), "degree": d})
    return Outcome(True, checked)


def pbw_cases(ctx, seed=0, rmax=3):
    alg = RTTAlgebra(ctx)

    def rng(tag):
        return random.Random("%s/%s/%d" % (ctx.label, tag, seed))

    return [
        Case("pbw/termination", {"rmax": rmax}, lambda: check_termination(alg, rng("termination"), rmax)),
        Case("pbw/idempotence", {"rmax": rmax}, lambda: check_idempotence(alg, rng("idempotence"), rmax)),
        Case("pbw/jacobi", {"rmax": rmax, "triples": JACOBI_TRIPLES}, lambda: check_jacobi(alg, rng("jacobi"), rmax)),
        Case("pbw/degree_drop", {"rmax": rmax}, lambda: check_degree_drop(alg, rmax)),
    ]


def check_soundness(ctx, rmax=3, points=(0,)):
    """``eval([t_ij^(r), t_kl^(s)]) = [eval t_ij^(r), eval t_kl^(s)]`` for all pairs with ``r, s <= rmax``.

    Both the raw commutator polynomial and its normal form are evaluated, so
    the dependent-letter rewriting is covered too.
    """
    alg = RTTAlgebra(ctx)
    ev = EvalMap(ctx, points)
    N = ctx.N
    idx = range(1, N + 1)
    checked = 0
    for r, s in product(range(1, rmax + 1), repeat=2):
        for i, j, k, l in product(idx, repeat=4):
            x, y = ev.image(i, j, r), ev.image(k, l, s)
            want = x * y - y * x
            raw = alg.commutator_coeff(i, j, r, k, l, s)
            checked += 1
            if ev.eval_poly(raw) != want:
                return Outcome(False, checked, {"pair": [i, j, r, k, l, s], "form": "raw"})
            if ev.eval_poly(raw.normal_order()) != want:
                return Outcome(False, checked, {"pair": [i, j, r, k, l, s], "form": "normal"})
    return Outcome(True, checked)


def soundness_cases(ctx, rmax=3):
    return [Case("pbw/soundness", {"rmax": rmax, "point": 0}, lambda: check_soundness(ctx, rmax))]
