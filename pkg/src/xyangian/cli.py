"""Command-line entry point: ``xyangian verify SUITE [options]``.

Exit status is 0 when no case fails, 1 when some case fails and 2 on a usage
error (click's convention).
"""

import sys

import click

from . import __version__
from .runner import (
    BACKENDS,
    DESK,
    SUITES,
    CatalogError,
    Plan,
    default_jobs,
    dump_report,
    make_report,
    run_plan,
)
from .tensor import AlgebraContext, ContextError

TYPE_A_DEFAULT = (2, 3)
TYPE_A_SUITES = ("ybe", "rtt", "pbw", "relations")


def _contexts(kind, n):
    if n is not None and kind is None:
        raise click.UsageError("--n needs --type")
    if kind is None:
        pairs = list(DESK)
    elif n is None:
        pairs = [(kind, m) for m in TYPE_A_DEFAULT] if kind == "A" else [p for p in DESK if p[0] == kind]
    else:
        pairs = [(kind, n)]
    out = []
    for k, m in pairs:
        try:
            ctx = AlgebraContext.of(k, m)
        except ContextError as exc:
            raise click.UsageError(str(exc))
        if k != "A" and (m < 1 or (k == "D" and m < 2)):
            raise click.UsageError("rank %d is not available for type %s" % (m, k))
        out.append((ctx.kind, ctx.N))
    return tuple(out)


@click.group()
@click.version_option(__version__, prog_name="xyangian")
def main():
    """Exact verification of extended Yangian identities."""


@main.command()
@click.argument("suite", type=click.Choice(SUITES + ("all",)))
@click.option("--type", "kind", type=click.Choice(["A", "B", "C", "D"]), help="Lie type; default is the desk matrix.")
@click.option("--n", "n", type=int, help="Rank n (N = 2n+1 for B, 2n for C and D, n for A).")
@click.option("--order", "K", type=int, help="Series order K; default 3 abstract, 4 oracle.")
@click.option("--backend", type=click.Choice(BACKENDS + ("both",)), default="abstract", show_default=True)
@click.option("--families", default="", help="Comma separated family keys or prefixes.")
@click.option("--jobs", type=int, default=None, help="Worker processes (default from XYANGIAN_JOBS or 1).")
@click.option("--report", "report_path", type=click.Path(dir_okay=False), help="Write a JSON report here.")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for the random property suites.")
@click.option("--stable", is_flag=True, help="Leave timings out of the report so identical runs give identical files.")
@click.option("--quiet", "-q", is_flag=True, help="Only print failures and the summary.")
def verify(suite, kind, n, K, backend, families, jobs, report_path, seed, stable, quiet):
    """Run one verification SUITE (or all of them)."""
    contexts = _contexts(kind, n)
    if suite == "all":
        suites = SUITES
        if kind == "A":
            suites = TYPE_A_SUITES
    else:
        suites = (suite,)
        if kind == "A" and suite not in TYPE_A_SUITES:
            raise click.UsageError("suite %r is not defined for type A (available: %s)" % (suite, ", ".join(TYPE_A_SUITES)))
    backends = BACKENDS if backend == "both" else (backend,)
    fams = tuple(f.strip() for f in families.split(",") if f.strip())
    plan = Plan(suites=suites, contexts=contexts, backends=backends, order=K, families=fams,
                seed=seed, jobs=jobs if jobs is not None else default_jobs())
    if plan.jobs < 1:
        raise click.UsageError("--jobs must be positive")
    try:
        plan.validate()
    except CatalogError as exc:
        raise click.UsageError(str(exc))

    def progress(rec):
        if not quiet or rec["status"] == "FAIL":
            line = "%-4s %s %s" % (rec["status"], rec["ctx"], rec["id"])
            if rec["status"] == "FAIL":
                line += " " + str(rec.get("witness", {}))
            click.echo(line)

    records = run_plan(plan, progress)
    report = make_report(plan, records, timing=not stable)
    if report_path:
        dump_report(report, report_path)
    s = report["summary"]
    click.echo("%d passed, %d failed, %d skipped" % (s["PASS"], s["FAIL"], s["SKIP"]))
    sys.exit(1 if s["FAIL"] else 0)


if __name__ == "__main__":
    main()
