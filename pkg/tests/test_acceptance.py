"""The eleven acceptance criteria, one test each.

Each criterion prints one line ``criterion N: PASS|FAIL ...`` with its wall
time and budget; the lines are repeated in the pytest terminal summary.  Run
``python3 tests/test_acceptance.py`` to get just those lines.
"""

import time

import pytest

from xyangian.morphisms import lowrank_cases
from xyangian.oracle import verify_eval_rtt
from xyangian.pbw import check_soundness, pbw_cases
from xyangian.rmatrix import verify_fusion, verify_ybe
from xyangian.runner import Plan, run_plan
from xyangian.tensor import AlgebraContext

YBE_CTX = [("A", 2), ("A", 3), ("B", 1), ("B", 2), ("C", 1), ("C", 2), ("D", 2), ("D", 3)]
FUSION_CTX = [("B", 1), ("B", 2), ("C", 1), ("C", 2), ("D", 2), ("D", 3)]
DESK = [("B", 1), ("B", 2), ("C", 2), ("D", 2), ("D", 3)]

RESULTS = {}


def _ctx(pair):
    return AlgebraContext.of(*pair)


def _outcomes(named):
    bad = [name for name, out in named if not out.ok]
    return not bad, "%d checks%s" % (len(named), "; failed: " + ", ".join(bad) if bad else "")


def _plan(suites, contexts, backend, K=None, families=()):
    pairs = tuple((c[0], _ctx(c).N) for c in contexts)
    return run_plan(Plan(suites=suites, contexts=pairs, backends=(backend,), order=K, families=families))


def _records(recs):
    fails = [r["ctx"] + " " + r["id"] for r in recs if r["status"] == "FAIL"]
    n_pass = sum(r["status"] == "PASS" for r in recs)
    n_skip = sum(r["status"] == "SKIP" for r in recs)
    detail = "%d cases, %d pass, %d skip" % (len(recs), n_pass, n_skip)
    if fails:
        detail += "; failed: " + ", ".join(fails[:5])
    return bool(recs) and not fails, detail


def c1():
    return _outcomes([(_ctx(c).label, verify_ybe(_ctx(c))) for c in YBE_CTX])


def c2():
    return _outcomes([(_ctx(c).label, verify_fusion(_ctx(c))) for c in FUSION_CTX])


def c3():
    return _outcomes([(_ctx(c).label, verify_eval_rtt(_ctx(c), 0)) for c in YBE_CTX])


def c4():
    return _outcomes([(_ctx(c).label, check_soundness(_ctx(c), rmax=3)) for c in [("B", 1), ("C", 2), ("D", 2)]])


GAUSS = ("gauss",)
MAIN = ("main",)


def c5():
    ctxs = [("B", 2), ("C", 2), ("D", 3)]
    recs = _plan(("relations",), ctxs, "abstract", 3, GAUSS) + _plan(("relations",), ctxs, "oracle", 4, GAUSS)
    return _records(recs)


def c6():
    ctxs = [("B", 1), ("B", 2), ("C", 2), ("D", 3)]
    recs = _plan(("drinfeld",), ctxs, "abstract", 3, MAIN) + _plan(("drinfeld",), ctxs, "oracle", 4, MAIN)
    return _records(recs)


CENTER = ("center/scalar", "center/right", "center/central", "center/product", "center/h1_hN",
          "center/hiprime", "center/recurrence", "center/base")


def c7():
    recs = _plan(("center",), DESK, "abstract", 3, CENTER) + _plan(("center",), DESK, "oracle", 4, CENTER)
    return _records(recs)


EMBED = ("embed/quasi_minor", "embed/commute", "embed/psi_consistency", "embed/tau_skew", "embed/tau_s",
         "embed/gauss_submatrix", "embed/sub_center", "embed/emjmtkl")


def c8():
    from xyangian.backends import Oracle
    from xyangian.morphisms import embedding_cases

    recs = _plan(("embeddings",), DESK, "abstract", 3, EMBED)
    B = Oracle(AlgebraContext.of("B", 3), 3, points=(0,))
    extra = [c for c in embedding_cases(B) if c.family in ("embed/psi_consistency", "embed/gauss_submatrix")]
    outs = [(B.ctx.label + " " + c.id, c.run()) for c in extra]
    ok1, d1 = _records(recs)
    ok2, d2 = _outcomes(outs)
    return ok1 and ok2 and len(extra) == 3, d1 + "; B3 oracle: " + d2


SYM = ("sym/mirror", "sym/conjugation", "sym/twist_drinfeld", "sym/twist_h", "sym/twist_center",
       "sym/sigma_involution", "sym/sigma_constant", "center/kappa_reconstruction")


def c9():
    suites = ("relations", "drinfeld", "embeddings", "center")
    return _records(_plan(suites, DESK, "abstract", 3, SYM))


def c10():
    return _outcomes([(c.id, c.run()) for c in lowrank_cases(4)])


def c11():
    named = []
    for c in [("A", 3)] + DESK:
        for case in pbw_cases(_ctx(c), seed=0):
            named.append((_ctx(c).label + " " + case.id, case.run()))
    return _outcomes(named)


CRITERIA = [
    (1, "Yang-Baxter equation", c1, 30),
    (2, "fusion identities", c2, 60),
    (3, "oracle RTT at a=0", c3, 60),
    (4, "backend soundness", c4, 120),
    (5, "Gaussian presentation catalog, abstract K=3 and oracle K=4", c5, 20 * 60),
    (6, "main presentation catalog, both backends", c6, 10 * 60),
    (7, "center", c7, 5 * 60),
    (8, "embeddings", c8, 5 * 60),
    (9, "symmetries and consequences", c9, 3 * 60),
    (10, "low-rank maps at K=4", c10, 3 * 60),
    (11, "PBW engine properties", c11, 2 * 60),
]


def run_criterion(num):
    _, title, fn, budget = CRITERIA[num - 1]
    t0 = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t0
    if dt > budget:
        ok = False
        detail += "; over the time budget"
    line = "criterion %d: %s  %s  (%.1f s, budget %d s)  %s" % (num, "PASS" if ok else "FAIL", title, dt, budget, detail)
    RESULTS[num] = (ok, line)
    print(line)
    return ok, line


@pytest.mark.parametrize("num", [c[0] for c in CRITERIA])
def test_criterion(num):
    ok, line = run_criterion(num)
    assert ok, line


if __name__ == "__main__":
    import sys

    nums = [int(a) for a in sys.argv[1:]] or [c[0] for c in CRITERIA]
    results = [run_criterion(n)[0] for n in nums]
    sys.exit(0 if all(results) else 1)
