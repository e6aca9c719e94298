"""Catalog enumeration, case execution and JSON reports.

A suite is a list of groups.  A group builds its cases from one backend (or
from the context alone), so groups are the unit of parallel work: every
worker rebuilds what it needs and the report is sorted afterwards, which
keeps it independent of the number of jobs.
"""

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import __version__
from .backends import make_backend
from .oracle import verify_eval_rtt
from .outcome import Outcome
from .relations import Case
from .tensor import AlgebraContext

SUITES = ("ybe", "fusion", "rtt", "pbw", "relations", "center", "embeddings", "drinfeld", "lowrank")
BACKENDS = ("abstract", "oracle")
DEFAULT_ORDER = {"abstract": 3, "oracle": 4}
LOWRANK_ORDER = 4
DESK = (("B", 1), ("B", 2), ("C", 2), ("D", 2), ("D", 3))
JOBS_ENV = "XYANGIAN_JOBS"


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class Group:
    suite: str
    name: str
    families: tuple
    uses_backend: bool
    kinds: str = "ABCD"


# family keys per group; tests check these against the built catalogs
GROUPS = (
    Group("ybe", "ybe", ("ybe",), False),
    Group("fusion", "fusion", ("fusion",), False, "BCD"),
    Group("rtt", "rtt", ("rtt/eval", "rtt/soundness"), False),
    Group("pbw", "pbw", ("pbw/degree_drop", "pbw/idempotence", "pbw/jacobi", "pbw/termination"), False),
    Group("relations", "gl", ("gl/eifj", "gl/eiej", "gl/eiej0", "gl/eiei", "gl/fifi", "gl/fifj", "gl/hiej",
                              "gl/hifj", "gl/hihj", "gl/serre_e", "gl/serre_f"), True, "A"),
    Group("relations", "gauss", ("gauss/adjacent", "gauss/eifj", "gauss/eiej", "gauss/eiej0", "gauss/eiei",
                                 "gauss/fifi", "gauss/fifj", "gauss/hiej", "gauss/hifj", "gauss/hihj",
                                 "gauss/hn1ej", "gauss/hn1en", "gauss/hn1en-1", "gauss/rootvec",
                                 "gauss/serre_e", "gauss/serre_f"), True, "BCD"),
    Group("relations", "block", ("block/eifj", "block/eiej", "block/eiej0", "block/eiei", "block/fifi",
                                 "block/fifj", "block/hiej", "block/hifj", "block/hihj", "block/serre_e",
                                 "block/serre_f", "dual/eifj", "dual/eiej", "dual/eiej0", "dual/eiei",
                                 "dual/fifi", "dual/fifj", "dual/hiej", "dual/hifj", "dual/hihj",
                                 "dual/serre_e", "dual/serre_f"), True, "BCD"),
    Group("relations", "sym", ("sym/conjugation", "sym/mirror"), True, "BCD"),
    Group("drinfeld", "main", ("main/kikj", "main/kixpj", "main/serre", "main/xpixmj", "main/xpixpj"), True, "BCD"),
    Group("drinfeld", "twist", ("sym/twist_center", "sym/twist_drinfeld", "sym/twist_h"), True, "BCD"),
    Group("center", "center", ("center/base", "center/central", "center/h1_hN", "center/hiprime",
                               "center/kappa_reconstruction", "center/product", "center/recurrence",
                               "center/right", "center/scalar"), True, "BCD"),
    Group("embeddings", "embed", ("embed/commute", "embed/emjmtkl", "embed/gauss_submatrix",
                                  "embed/psi_consistency", "embed/psi_homomorphism", "embed/psi_twist",
                                  "embed/quasi_minor", "embed/sub_center", "embed/tau_s", "embed/tau_skew"),
          True, "BCD"),
    Group("embeddings", "sigma", ("sym/sigma_constant", "sym/sigma_homomorphism", "sym/sigma_involution"),
          True, "BCD"),
    Group("lowrank", "lowrank", ("lowrank/catalog", "lowrank/homomorphism", "lowrank/sqrt2_parity"), False),
)


def known_families(suites=SUITES, kind=None):
    out = set()
    for g in GROUPS:
        if g.suite in suites and (kind is None or kind in g.kinds):
            out.update(g.families)
    return sorted(out)


def _matches(key, family):
    return family == key or family.startswith(key.rstrip("/") + "/")


@dataclass
class Plan:
    suites: tuple
    contexts: tuple
    backends: tuple = ("abstract",)
    order: int = None
    families: tuple = ()
    seed: int = 0
    jobs: int = 1

    def K(self, backend):
        return self.order if self.order is not None else DEFAULT_ORDER[backend]

    def validate(self):
        for s in self.suites:
            if s not in SUITES:
                raise CatalogError("unknown suite %r; known: %s" % (s, ", ".join(SUITES)))
        for b in self.backends:
            if b not in BACKENDS:
                raise CatalogError("unknown backend %r; known: %s" % (b, ", ".join(BACKENDS)))
        if self.order is not None and self.order < 1:
            raise CatalogError("order must be at least 1")
        known = known_families(self.suites)
        bad = [k for k in self.families if not any(_matches(k, f) for f in known)]
        if bad:
            raise CatalogError("unknown family key(s) %s; known keys: %s" % (", ".join(bad), ", ".join(known)))

    def wanted(self, family):
        return not self.families or any(_matches(k, family) for k in self.families)

    def tasks(self):
        """``(ctx, group, backend)`` triples with something to run, in a fixed order."""
        out = []
        for kind, N in self.contexts:
            for g in GROUPS:
                if g.suite not in self.suites or kind not in g.kinds:
                    continue
                if not any(self.wanted(f) for f in g.families):
                    continue
                if g.name == "lowrank" and any(t[1] == "lowrank" for t in out):
                    continue
                for b in (self.backends if g.uses_backend else (None,)):
                    out.append(((kind, N), g.name, b))
        return out


def _build(ctx, group, backend, plan, cache):
    """Cases of one group; ``cache`` holds backends shared between groups."""
    from . import identities, morphisms, pbw, relations
    from .rmatrix import verify_fusion, verify_ybe

    if group == "ybe":
        return [Case("ybe", {}, lambda: verify_ybe(ctx))]
    if group == "fusion":
        return [Case("fusion", {}, lambda: verify_fusion(ctx))]
    if group == "rtt":
        rmax = 3 if ctx.N <= 4 else 2
        return [Case("rtt/eval", {"a": 0}, lambda: verify_eval_rtt(ctx, 0))] + pbw.soundness_cases(ctx, rmax)
    if group == "pbw":
        return pbw.pbw_cases(ctx, plan.seed)
    if group == "lowrank":
        return morphisms.lowrank_cases(plan.order or LOWRANK_ORDER)
    key = (ctx, backend)
    if key not in cache:
        cache[key] = make_backend(backend, ctx, plan.K(backend))
    B = cache[key]
    if group == "gl":
        return relations.gl_cases(B.G, B.K)
    if group == "gauss":
        D = B.D
        return (relations.presentation_cases(D, B.K) + relations.adjacent_root_cases(D)
                + relations.root_vector_cases(D))
    if group == "block":
        return relations.block_cases(B.D, B.K)
    if group == "sym":
        return identities.symmetry_cases(B)
    if group == "main":
        return relations.main_cases(B.D, B.K)
    if group == "twist":
        return identities.twist_cases(B)
    if group == "center":
        return identities.center_cases(B)
    if group == "embed":
        return morphisms.embedding_cases(B)
    if group == "sigma":
        return morphisms.sigma_cases(B)
    raise CatalogError("unknown group %r" % (group,))


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


def run_case(case):
    t0 = time.perf_counter()
    try:
        out = case.run()
    except Exception as exc:  # a crash is reported as a failure with its message
        out = Outcome(False, 0, {"error": "%s: %s" % (type(exc).__name__, exc)})
    millis = int(round((time.perf_counter() - t0) * 1000))
    rec = {"status": out.status, "checked": out.checked, "millis": millis}
    if out.skipped:
        rec["reason"] = out.skipped
    if not out.ok:
        rec["witness"] = _jsonable(out.witness)
    return rec


def _run_task(plan, task, cache=None, progress=None):
    (kind, N), group, backend = task
    ctx = AlgebraContext(kind, N)
    cache = {} if cache is None else cache
    records = []
    try:
        cases = _build(ctx, group, backend, plan, cache)
    except Exception as exc:
        cases = [Case(group + "/build", {}, lambda exc=exc: Outcome(False, 0, {"error": "%s: %s" % (type(exc).__name__, exc)}))]
    for c in cases:
        if not plan.wanted(c.family):
            continue
        params = dict(c.params)
        if backend is not None:
            params["backend"] = backend
        cid = Case(c.family, params, None).id
        rec = {"id": cid, "ctx": ctx.label, "family": c.family, "params": _jsonable(params)}
        rec.update(run_case(c))
        records.append(rec)
        if progress:
            progress(rec)
    return records


def _sort_key(rec):
    return (rec["ctx"], rec["id"])


def run_plan(plan, progress=None):
    """Run every task of ``plan``; returns the sorted case records."""
    plan.validate()
    tasks = plan.tasks()
    records = []
    if plan.jobs <= 1 or len(tasks) <= 1:
        cache = {}
        for t in tasks:
            records += _run_task(plan, t, cache, progress)
    else:
        with ProcessPoolExecutor(max_workers=plan.jobs) as pool:
            futures = [pool.submit(_run_task, plan, t) for t in tasks]
            for fut in futures:
                recs = fut.result()
                if progress:
                    for r in recs:
                        progress(r)
                records += recs
    records.sort(key=_sort_key)
    return records


def make_report(plan, records, timing=True):
    Ks = {b: plan.K(b) for b in plan.backends}
    labels = [AlgebraContext(k, N).label for k, N in plan.contexts]
    run = {
        "ctx": labels[0] if len(labels) == 1 else labels,
        "K": next(iter(Ks.values())) if len(set(Ks.values())) == 1 else Ks,
        "backend": plan.backends[0] if len(plan.backends) == 1 else "both",
        "seed": plan.seed,
        "version": __version__,
        "suites": list(plan.suites),
    }
    if plan.families:
        run["families"] = list(plan.families)
    cases = []
    for r in records:
        rec = {k: r[k] for k in ("id", "ctx", "params", "status", "checked")}
        for k in ("reason", "witness"):
            if k in r:
                rec[k] = r[k]
        if timing:
            rec["millis"] = r["millis"]
        cases.append(rec)
    summary = {s: sum(1 for r in records if r["status"] == s) for s in ("PASS", "FAIL", "SKIP")}
    return {"run": run, "summary": summary, "cases": cases}


def dump_report(report, path):
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text


def default_jobs():
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1
