"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import csv
import io
import json
import sys

import click

from . import airy, distributions as dist, graphs, moments as mom, transforms as tr
from .moments import AreaKind, area_kind

KIND_CHOICES = ["ex", "br", "bm", "me", "dm", "br+", "bm+"]
FORMATS = click.Choice(["text", "csv", "json"])


def _num(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return f"{v:.12g}"
    return v


def _emit(header, rows, fmt):
    if fmt == "json":
        click.echo(json.dumps([dict(zip(header, r)) for r in rows], indent=2))
        return
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([_num(v) for v in r])
        click.echo(buf.getvalue(), nl=False)
        return
    cells = [list(header)] + [[str(_num(v)) for v in r] for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(len(header))]
    for c in cells:
        click.echo("  ".join(s.rjust(w) for s, w in zip(c, widths)).rstrip())


def _usage_fail(msg):
    click.echo(f"error: {msg}", err=True)
    sys.exit(2)


def _kinds(values):
    return [area_kind(k) for k in values] if values else list(AreaKind)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Exact moments, distributions and checks for Brownian areas."""


@main.command("moments")
@click.option("--kind", "kinds", multiple=True, type=click.Choice(KIND_CHOICES, case_sensitive=False),
              help="Area kind (repeatable); all kinds by default.")
@click.option("--n", "n_max", default=4, show_default=True, type=click.IntRange(0, 500),
              help="Largest moment order.")
@click.option("--only", is_flag=True, help="Print only order n instead of 0..n.")
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
def cmd_moments(kinds, n_max, only, fmt):
    """Exact moments E X^n with a decimal column."""
    rows = []
    for k in _kinds(kinds):
        for n in ([n_max] if only else range(n_max + 1)):
            m = mom.moment(k, n)
            rows.append((k.value, n, m.pretty(), float(m)))
    _emit(("kind", "n", "exact", "decimal"), rows, fmt)


def _points(values, grid):
    pts = list(values)
    if grid:
        try:
            a, b, n = grid.split(":")
            a, b, n = float(a), float(b), int(n)
        except ValueError:
            _usage_fail("--grid expects start:stop:count")
        if n < 1:
            _usage_fail("--grid count must be positive")
        pts += [a + (b - a) * i / max(n - 1, 1) for i in range(n)]
    if not pts:
        _usage_fail("give at least one point with --x/--t or --grid")
    return pts


@main.command("eval")
@click.option("--kind", required=True, type=click.Choice(KIND_CHOICES, case_sensitive=False))
@click.option("--target", required=True, type=click.Choice(["pdf", "cdf", "sf", "psi", "tail"]))
@click.option("--x", "xs", multiple=True, type=float, help="Evaluation point (repeatable).")
@click.option("--t", "ts", multiple=True, type=float, help="Laplace variable for psi (repeatable).")
@click.option("--grid", help="Uniform grid start:stop:count.")
@click.option("--side", type=click.Choice(["small", "large"]), default="large", show_default=True,
              help="Tail side for --target tail.")
@click.option("--tail-target", type=click.Choice(["pdf", "cdf", "sf"]), default="sf", show_default=True)
@click.option("--terms", type=click.IntRange(1, 10_000), default=200, show_default=True,
              help="Maximum number of series terms.")
@click.option("--tol", type=float, default=1e-16, show_default=True, help="Absolute series tolerance.")
@click.option("--format", "fmt", type=FORMATS, default="csv", show_default=True)
def cmd_eval(kind, target, xs, ts, grid, side, tail_target, terms, tol, fmt):
    """Evaluate pdf, cdf, sf, psi = E exp(-t X) or a tail expansion on points."""
    k = area_kind(kind)
    ctl = dist.SeriesControl(max_terms=terms, abs_tol=tol)
    pts = _points(ts if target == "psi" else xs, grid)
    rows = []
    try:
        for p in pts:
            if target == "pdf":
                r = dist.pdf_detail(k, p, ctl)
                rows.append((k.value, target, p, r.value, r.terms, r.bound))
            elif target in ("cdf", "sf"):
                if k in (AreaKind.Ex, AreaKind.Br, AreaKind.Me):
                    if target == "cdf":
                        r = dist.cdf_detail(k, p, ctl)
                        rows.append((k.value, target, p, r.value, r.terms, r.bound))
                    else:
                        rows.append((k.value, target, p, dist.sf(k, p, ctl), None, None))
                else:
                    v = dist.cdf_generic(k, p, ctl) if target == "cdf" else dist.sf_generic(k, p, ctl)
                    rows.append((k.value, target, p, v, None, None))
            elif target == "psi":
                if p > tr.S_SPLIT and k not in (AreaKind.BrPlus, AreaKind.BmPlus):
                    r = tr.psi_spectral_detail(k, p)
                    rows.append((k.value, target, p, r.value, r.terms, r.bound))
                else:
                    rows.append((k.value, target, p, tr.psi(k, p), None, None))
            else:
                r = dist.tail_terms(k, side + "X", tail_target, p)
                rows.append((k.value, f"tail_{side}_{tail_target}", p, r.value, len(r.terms),
                             abs(r.terms[-1])))
    except dist.UnsupportedError as e:
        _usage_fail(f"unsupported: {e}")
    except ValueError as e:
        _usage_fail(str(e))
    _emit(("kind", "target", "point", "value", "terms", "bound"), rows, fmt)


@main.command("verify")
@click.option("--suite", default="all", show_default=True,
              type=click.Choice(["sequences", "identities", "airy", "distributions", "transforms",
                                 "graphs", "mc", "all"]))
@click.option("--json", "json_path", type=click.Path(dir_okay=False, writable=True),
              help="Write the JSON report here ('-' for stdout).")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("--tol", type=float, default=None, help="Tolerance for the double-Laplace checks.")
@click.option("--seed", type=click.IntRange(0, 2 ** 64 - 1), default=None,
              help="Monte Carlo seed (mc suite).")
@click.option("--reps", type=click.IntRange(50), default=None, help="Monte Carlo replications.")
@click.option("--grid-points", type=int, default=None, help="Monte Carlo grid size (power of two).")
def cmd_verify(suite, json_path, fmt, tol, seed, reps, grid_points):
    """Run a verification suite; exit 1 if any case fails."""
    from . import verification
    kw = {"tol": tol}
    if suite in ("mc", "all"):
        from .montecarlo import PathConfig
        base = PathConfig()
        try:
            kw["mc_config"] = PathConfig(grid_points or base.grid_points, reps or base.replications,
                                         base.seed if seed is None else seed)
        except ValueError as e:
            _usage_fail(str(e))
    rep = verification.run_suite(suite, **kw)
    if json_path == "-" or fmt == "json":
        click.echo(rep.to_json())
    else:
        for c in rep.cases:
            inputs = ",".join(f"{k}={v}" for k, v in c.inputs.items())
            click.echo(f"{'PASS' if c.ok else 'FAIL'}  {c.id}  {inputs}")
        s = rep.summary()
        click.echo(f"{suite}: {s['passed']}/{s['total']} passed in {rep.seconds:.1f} s")
    if json_path and json_path != "-":
        with open(json_path, "w") as fh:
            fh.write(rep.to_json())
    sys.exit(0 if rep.ok else 1)


@main.command("graphs")
@click.option("--n-max", default=40, show_default=True, type=click.IntRange(1, graphs.N_MAX))
@click.option("--n-min", default=1, show_default=True, type=click.IntRange(1, graphs.N_MAX))
@click.option("--k", "ks", multiple=True, type=click.IntRange(-1), help="Excess k (repeatable).")
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
def cmd_graphs(n_max, n_min, ks, fmt):
    """Connected graph counts C(n, n+k) and ratios to Wright's asymptotic."""
    ks = ks or (-1, 0, 1, 2)
    rows = graphs.wright_rows(range(n_min, n_max + 1), ks)
    if fmt == "json":
        # counts exceed double precision; keep them exact as strings
        rows = [(n, k, str(c), r) for n, k, c, r in rows]
    _emit(("n", "k", "count", "ratio"), rows, fmt)


@main.command("mc")
@click.option("--kind", "kinds", multiple=True, type=click.Choice(KIND_CHOICES, case_sensitive=False))
@click.option("--seed", type=click.IntRange(0, 2 ** 64 - 1), default=20240601, show_default=True)
@click.option("--reps", type=click.IntRange(50), default=100_000, show_default=True)
@click.option("--grid-points", type=int, default=2 ** 14, show_default=True)
@click.option("--workers", type=click.IntRange(1), default=1, show_default=True)
@click.option("--samples", type=click.Path(dir_okay=False), help="Write raw samples of one kind here.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="json", show_default=True)
def cmd_mc(kinds, seed, reps, grid_points, workers, samples, fmt):
    """Simulate area samples and summarise moments against exact values."""
    from . import montecarlo as mc
    try:
        cfg = mc.PathConfig(grid_points, reps, seed, workers=workers)
    except ValueError as e:
        _usage_fail(str(e))
    ks = _kinds(kinds)
    if samples and len(ks) != 1:
        _usage_fail("--samples needs exactly one --kind")
    data = mc.simulate(cfg)
    sums = [mc.summarize(k, data[k]) for k in ks]
    if samples:
        mc.write_samples(samples, data[ks[0]], cfg)
    if fmt == "json":
        click.echo(mc.summary_json(sums, cfg))
        return
    rows = [(s.kind, m.order, m.estimate, m.se, m.exact, round(m.z, 2)) for s in sums for m in s.moments]
    _emit(("kind", "order", "estimate", "se", "exact", "z"), rows, "text")


@main.command("zeros")
@click.option("--n", default=50, show_default=True, type=click.IntRange(1, airy.TABLE_SIZE))
@click.option("--format", "fmt", type=FORMATS, default="csv", show_default=True)
def cmd_zeros(n, fmt):
    """Zeros of Ai and Ai' (as positive numbers) with residue data."""
    import mpmath
    rows = [(e.j,) + tuple(mpmath.nstr(v, 17) for v in (e.a, e.a_prime, e.kappa, e.r, e.R))
            for e in airy.zero_table().entries(n)]
    _emit(("j", "a_j", "a_prime_j", "kappa_j", "r_j", "R_j"), rows, fmt)


if __name__ == "__main__":
    main()
