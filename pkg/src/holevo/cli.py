"""Command-line interface: a thin client over the same handlers the service uses.

Exit codes: 0 success (and no violations), 1 violations found, 2 usage or
I/O errors.
"""

import json
import sys

import click

from .errors import HolevoError
from .linalg import Rng
from .states import validate_density
from .entropy import holevo_chi
from .channels import apply as apply_channel
from .measurements import optimize_accessible_info
from .campaigns import CHECKS, CampaignConfig, run_campaign
from .demos import DEMOS, run_demo
from . import serialize


class CliError(click.ClickException):
    """Usage or I/O failure; exits with status 2 like click's UsageError."""

    exit_code = 2


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _dump_json(payload, out):
    text = json.dumps(payload, indent=2)
    if out is None:
        click.echo(text)
    else:
        try:
            with open(out, "w") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            raise CliError(f"cannot write {out}: {exc}") from exc


@click.group()
def main():
    """Numerical Holevo-chi toolkit and inequality verifier."""


@main.command()
@click.option("--check", default=None,
              help="Check name or 'all' (default all). Known: "
                   + ", ".join(CHECKS))
@click.option("--dim", type=int, default=None, help="System dimension, 2..6.")
@click.option("--trials", type=int, default=None, help="Trials per check.")
@click.option("--seed", type=int, default=None, help="Campaign seed.")
@click.option("--ensemble-size", type=int, default=None,
              help="Max ensemble members, 2..6.")
@click.option("--tolerance", type=float, default=None,
              help="Violation threshold (default 1e-8).")
@click.option("--out", type=click.Path(), default=None,
              help="Write the JSON report here instead of stdout.")
@click.option("--config", "config_path", type=click.Path(), default=None,
              help="JSON file with campaign settings; flags override it.")
@click.option("--serial", is_flag=True, help="Force single-threaded execution.")
@click.option("--jobs", type=int, default=1, help="Worker processes.")
def verify(check, dim, trials, seed, ensemble_size, tolerance, out,
           config_path, serial, jobs):
    """Run seeded randomized verification campaigns."""
    settings = {}
    if config_path is not None:
        settings.update(_load_json(config_path))
    for key, value in (("check", check), ("dim", dim), ("trials", trials),
                       ("seed", seed), ("ensemble_size", ensemble_size),
                       ("tolerance", tolerance)):
        if value is not None:
            settings[key] = value
    try:
        cfg = CampaignConfig(**settings)
    except (HolevoError, TypeError) as exc:
        raise CliError(str(exc)) from exc
    report = run_campaign(cfg, jobs=1 if serial else max(1, jobs))
    for c in report.checks:
        status = "FAIL" if c.violations else "ok"
        click.echo(f"{c.check:28s} trials={c.trials} min_slack={c.min_slack:+.3e} "
                   f"violations={len(c.violations)} [{status}]", err=True)
    _dump_json(report.to_dict(), out)
    if report.total_violations > 0:
        sys.exit(1)


@main.command()
@click.argument("ensemble_file", type=click.Path())
def chi(ensemble_file):
    """Print the Holevo chi report for an ensemble file."""
    try:
        e = serialize.ensemble_from_dict(_load_json(ensemble_file))
        rep = holevo_chi(e)
    except HolevoError as exc:
        raise CliError(str(exc)) from exc
    _dump_json(serialize.chi_report_to_dict(rep), None)


@main.command("apply")
@click.argument("channel_file", type=click.Path())
@click.argument("state_file", type=click.Path())
@click.option("--out", type=click.Path(), default=None,
              help="Output state file (default stdout).")
def apply_cmd(channel_file, state_file, out):
    """Apply a Kraus channel file to a density-matrix file."""
    try:
        ch = serialize.channel_from_dict(_load_json(channel_file))
        rho = validate_density(serialize.matrix_from_dict(_load_json(state_file)))
        result = apply_channel(ch, rho)
    except HolevoError as exc:
        raise CliError(str(exc)) from exc
    _dump_json(serialize.density_to_dict(result), out)


@main.command("optimize-povm")
@click.argument("ensemble_file", type=click.Path())
@click.option("--outcomes", type=int, default=None)
@click.option("--restarts", type=int, default=20)
@click.option("--iters", type=int, default=500)
@click.option("--seed", type=int, default=0)
@click.option("--out", type=click.Path(), default=None)
def optimize_povm(ensemble_file, outcomes, restarts, iters, seed, out):
    """Maximize extracted mutual information over rank-one POVMs."""
    try:
        e = serialize.ensemble_from_dict(_load_json(ensemble_file))
        res = optimize_accessible_info(e, outcomes=outcomes, restarts=restarts,
                                       iters=iters, rng=Rng(seed))
    except HolevoError as exc:
        raise CliError(str(exc)) from exc
    _dump_json(serialize.accessible_info_to_dict(res), out)


@main.command()
@click.argument("name", default="all")
def demo(name):
    """Run a named no-go demonstration (or 'all')."""
    names = list(DEMOS) if name == "all" else [name]
    payload = {}
    for n in names:
        try:
            payload[n] = run_demo(n)
        except KeyError as exc:
            raise CliError(str(exc.args[0])) from exc
    _dump_json(payload, None)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host, port):
    """Start the HTTP service."""
    import uvicorn

    uvicorn.run("holevo.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
