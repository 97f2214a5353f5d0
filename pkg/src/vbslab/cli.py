"""``vbslab`` command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.
"""

from __future__ import annotations

import functools
import os
import sys

import click
from threadpoolctl import threadpool_limits

from . import output, reports
from .config import ConfigError, RunConfig, resolve
from .verify import run_checks


def _parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError:
        raise click.BadParameter(f"expected an integer or LO..HI, got {text!r}")


def _threads() -> int | None:
    raw = os.environ.get("VBSLAB_THREADS", "").strip()
    if not raw:
        return None
    try:
        n = int(raw)
    except ValueError:
        raise click.UsageError(f"VBSLAB_THREADS must be an integer, got {raw!r}")
    return n if n > 0 else None


def common_options(func):
    @click.option("--n-max", type=int, default=None, help="Largest chain built by brute force (default 8, max 10).")
    @click.option("--l-max", type=int, default=None, help="Largest closed-form block (default 6).")
    @click.option("--format", "output_format", type=click.Choice(["csv", "json"]), default=None)
    @click.option("--out", "output_path", type=click.Path(dir_okay=False), default=None)
    @click.option("--tol", "tolerance", type=float, default=None, help="Verification tolerance (default 1e-10).")
    @click.option("--config", "config_file", type=click.Path(exists=True, dir_okay=False), default=None,
                  help="key=value file; flags override it.")
    @functools.wraps(func)
    def wrapper(*args, n_max, l_max, output_format, output_path, tolerance, config_file, **kwargs):
        try:
            cfg = resolve(config_file, n_max=n_max, l_max=l_max, output_format=output_format,
                          output_path=output_path, tolerance=tolerance)
        except ConfigError as exc:
            raise click.UsageError(str(exc))
        limit = _threads()
        try:
            if limit is None:
                return func(*args, cfg=cfg, **kwargs)
            with threadpool_limits(limits=limit):
                return func(*args, cfg=cfg, **kwargs)
        except ValueError as exc:
            raise click.UsageError(str(exc))

    return wrapper


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _emit_table(cfg: RunConfig, tab: reports.Table, **meta) -> None:
    if cfg.output_format == "json":
        _emit(cfg, output.table_json(tab.columns, tab.rows, **meta))
    else:
        _emit(cfg, output.table_csv(tab.columns, tab.rows))


@click.group()
def cli():
    """Exact entanglement properties of the AKLT valence-bond-solid chain."""


@cli.command()
@click.argument("kind", type=click.Choice(reports.TABLE_KINDS))
@click.argument("range_", metavar="RANGE")
@click.option("--of", "of", type=click.Choice(reports.CONCURRENCE_OF), default="block",
              help="Which reduction the concurrence table uses.")
@common_options
def table(kind, range_, of, cfg):
    """Closed-form entropies, concurrences or correlators over RANGE (e.g. 1..6)."""
    lo, hi = _parse_range(range_)
    tab = reports.table(kind, lo, hi, n_max=cfg.n_max, of=of)
    _emit_table(cfg, tab, command="table", kind=kind)


def _density_command(which, param, cfg, with_matrix):
    rho = reports.density(which, param, l_max=cfg.l_max)
    spec, ent = reports.spectrum_of(rho)
    meta = dict(command="rho" if with_matrix else "spectrum", which=which, param=param)
    if with_matrix:
        if cfg.output_format == "json":
            _emit(cfg, output.density_json(rho.matrix, spec, ent, rho.dims, **meta))
        else:
            _emit(cfg, output.density_csv(rho.matrix, spec, ent, rho.dims))
    else:
        tab = reports.Table(["index", "eigenvalue"], [[i, float(x)] for i, x in enumerate(spec)])
        tab.rows.append(["entropy", ent])
        _emit_table(cfg, tab, **meta)


@cli.command()
@click.argument("which", type=click.Choice(reports.RHO_KINDS))
@click.argument("param", type=int, default=0)
@common_options
def rho(which, param, cfg):
    """Print a closed-form reduced density matrix with its spectrum and entropy."""
    _density_command(which, param, cfg, with_matrix=True)


@cli.command()
@click.argument("which", type=click.Choice(reports.RHO_KINDS))
@click.argument("param", type=int, default=0)
@common_options
def spectrum(which, param, cfg):
    """Print only the spectrum and entropy of a reduced density matrix."""
    _density_command(which, param, cfg, with_matrix=False)


@cli.command()
@common_options
def verify(cfg):
    """Check every closed form against the brute-force oracle."""
    checks = run_checks(n_max=cfg.n_max, l_max=cfg.l_max, tol=cfg.tolerance)
    tab = reports.Table(["check", "status", "deviation", "tolerance", "detail"])
    for c in checks:
        tab.rows.append([c.name, "pass" if c.passed else "FAIL", c.deviation, c.tolerance, c.detail])
    _emit_table(cfg, tab, command="verify")
    failed = [c.name for c in checks if not c.passed]
    if failed:
        click.echo(f"{len(failed)} of {len(checks)} checks failed: {', '.join(failed)}", err=True)
        sys.exit(1)
    click.echo(f"all {len(checks)} checks passed", err=True)


@cli.command()
@click.argument("range_", metavar="RANGE", default="2..6")
@click.option("--repeats", type=int, default=3, show_default=True)
@common_options
def bench(range_, repeats, cfg):
    """Time closed-form vs brute-force end-pair entropy for N in RANGE."""
    lo, hi = _parse_range(range_)
    _emit_table(cfg, reports.bench(lo, hi, n_max=cfg.n_max, repeats=repeats), command="bench")


def main():
    cli()


if __name__ == "__main__":
    main()
