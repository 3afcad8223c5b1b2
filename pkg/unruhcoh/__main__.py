#!/usr/bin/env python

"""
Command line interface for unruhcoh

unruhcoh coherence --family ghz --theta 0.7854 --accel 2:2.0

unruhcoh sweep --family w-sym --accel 2 --grid 0:4:41 --out w.csv

unruhcoh compare --family wwbar --accel 2 --grid 0.25:2.5:10

unruhcoh preset --preset fig9b --out fig9b.csv
"""

from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional
import typer
from unruhcoh import __version__, set_log_level
from unruhcoh.errors import UnruhcohError, UnsupportedPattern
from unruhcoh.fock.rindler import (
    DEFAULT_TAIL_TOL,
    N_MAX_CAP,
    AccelerationSpec,
    TruncationPolicy,
)
from unruhcoh.states.builders import MAX_TERMS
from unruhcoh.states.families import (
    Family,
    StateSpec,
    STAR_CENTRAL,
    STAR_PERIPHERAL,
)
from unruhcoh.sweeps.config import Grid, Mode, SweepConfig
from unruhcoh.sweeps.presets import Preset, preset_blocks
from unruhcoh.sweeps.runner import (
    Point,
    compare,
    evaluate_point,
    iter_points,
    run_sweep,
    write_csv,
)


CONTEXT_SETTINGS = dict(help_option_names=["-h", "--help"])
app = typer.Typer(add_completion=False, context_settings=CONTEXT_SETTINGS)


class LogLevel(Enum):
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"


class Pair(Enum):
    AB = "AB"
    BC = "BC"
    AC = "AC"


def version_callback(value: bool):
    "Adding a --version option to the CLI"
    if value:
        typer.echo(f"unruhcoh {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        None,
        "--version", "-v",
        callback=version_callback,
        is_eager=True,
        help="print version and exit."),
    log_level: LogLevel = typer.Option(
        LogLevel.WARNING,
        "--log-level",
        help="verbosity of the log written to stderr."),
    ):
    """
    Call unruhcoh commands to evaluate coherence of accelerated
    multipartite states, and unruhcoh COMMAND -h to see help options
    for each tool (e.g., unruhcoh sweep -h)
    """
    set_log_level(log_level.value)
    typer.secho(
        f"unruhcoh (v.{__version__}): accessible coherence under acceleration",
        fg=typer.colors.MAGENTA, err=True,
    )


def _party_id(token: str, family: Family, taken: List[int]) -> int:
    "A party id, or a star role name resolved to its party."
    token = token.strip().lower()
    if token == "central":
        if family != Family.star:
            raise typer.BadParameter("'central' is only defined for the star family")
        return STAR_CENTRAL
    if token == "peripheral":
        if family != Family.star:
            raise typer.BadParameter("'peripheral' is only defined for the star family")
        for party in STAR_PERIPHERAL:
            if party not in taken:
                return party
        raise typer.BadParameter("the star state has only two peripheral qubits")
    try:
        return int(token)
    except ValueError:
        raise typer.BadParameter(f"'{token}' is not a party id")


def parse_accel(text: str, family: Family, omega: bool = False) -> Dict[int, AccelerationSpec]:
    """
    Parse 'none' or a comma list of party:value, where party is an id
    or central/peripheral for the star family and value is r (or
    Omega with --omega).
    """
    if text.strip().lower() in ("", "none"):
        return {}
    accel = {}
    for item in text.split(","):
        if ":" not in item:
            raise typer.BadParameter(f"'{item}' must look like party:value")
        (token, value) = item.rsplit(":", 1)
        party = _party_id(token, family, list(accel))
        if party in accel:
            raise typer.BadParameter(f"party {party} given twice")
        try:
            value = float(value)
            accel[party] = (
                AccelerationSpec.from_omega(value) if omega
                else AccelerationSpec(value))
        except ValueError as err:
            raise typer.BadParameter(str(err))
    return accel


def parse_parties(text: str, family: Family) -> List[int]:
    "Parse 'none' or a comma list of party ids / star role names."
    if text.strip().lower() in ("", "none"):
        return []
    parties = []
    for token in text.split(","):
        parties.append(_party_id(token, family, parties))
    return parties


def _values(single: Optional[float], grid: Optional[str]):
    "One value, or the values of a start:stop:count grid."
    if grid is not None:
        try:
            return Grid.parse(grid).values
        except ValueError as err:
            raise typer.BadParameter(str(err))
    return (single,)


def _policy(tail_tol: float, n_max: Optional[int]) -> TruncationPolicy:
    try:
        if n_max is not None:
            return TruncationPolicy.fixed(n_max)
        return TruncationPolicy.tolerance(tail_tol, N_MAX_CAP)
    except ValueError as err:
        raise typer.BadParameter(str(err))


def _fail(err: Exception):
    "Report a runtime failure and exit 1."
    typer.secho(f"error: {err}", fg=typer.colors.RED, err=True)
    raise typer.Exit(1)


def _sweep_blocks(
    family, theta, theta_grid, phi, phi_grid, n_parties, accel, grid, grid2,
    n_accel, omega, tail_tol, n_max, max_terms, mode, normalized,
    ) -> List[SweepConfig]:
    "One SweepConfig from the shared sweep/compare options."
    _policy(tail_tol, n_max)
    try:
        r1 = Grid.parse(grid).values
        r2 = None if grid2 is None else Grid.parse(grid2).values
        nvalues = None
        if n_accel is not None:
            nvalues = tuple(int(i) for i in n_accel.split(","))
        return [SweepConfig(
            family=family,
            accelerated=tuple(parse_parties(accel, family)),
            r1=r1,
            r2=r2,
            thetas=_values(theta, theta_grid),
            phis=_values(phi, phi_grid),
            n_parties=n_parties,
            n_accel=nvalues,
            tail_tol=tail_tol,
            n_max=n_max,
            max_terms=max_terms,
            mode=mode,
            normalized=normalized,
            omega=omega,
        )]
    except ValueError as err:
        raise typer.BadParameter(str(err))


def _check_points(blocks: List[SweepConfig]):
    "Fail fast with a usage error when any grid point cannot be built."
    try:
        for _ in iter_points(blocks):
            pass
    except ValueError as err:
        raise typer.BadParameter(str(err))


@app.command()
def coherence(
    family: Family = typer.Option(..., help="state family"),
    theta: float = typer.Option(None, help="theta in radians (ghz, w)"),
    phi: float = typer.Option(None, help="phi in radians (w)"),
    n_parties: int = typer.Option(3, "--N", help="number of parties (ghz-n, w-n, plus)"),
    accel: str = typer.Option(
        "none", help="comma list party:r, central:r / peripheral:r for star, or none"),
    omega: bool = typer.Option(False, "--omega", help="read accel values as Omega"),
    reduce: Pair = typer.Option(None, help="trace out the third party first"),
    tail_tol: float = typer.Option(DEFAULT_TAIL_TOL, help="omitted probability per party"),
    n_max: int = typer.Option(None, help="fixed Rindler cutoff (overrides tail-tol)"),
    max_terms: int = typer.Option(MAX_TERMS, help="largest state built numerically"),
    mode: Mode = typer.Option(Mode.both, help="numeric, analytic or both"),
    ):
    """
    Evaluate C_T, C_G and C_L of one state and print it as a CSV row.
    """
    policy = _policy(tail_tol, n_max)
    try:
        spec = StateSpec(
            family, theta, phi, n_parties,
            parse_accel(accel, family, omega), policy)
    except ValueError as err:
        raise typer.BadParameter(str(err))

    point = Point(
        spec=spec, mode=mode, max_terms=max_terms,
        pair=None if reduce is None else reduce.value, tail_tol=tail_tol,
    )
    try:
        row = evaluate_point(point)
    except UnsupportedPattern as err:
        raise typer.BadParameter(str(err))
    except UnruhcohError as err:
        _fail(err)
    typer.echo(write_csv([row]), nl=False)


@app.command()
def sweep(
    family: Family = typer.Option(..., help="state family"),
    theta: float = typer.Option(None, help="theta in radians"),
    theta_grid: str = typer.Option(None, help="theta grid start:stop:count"),
    phi: float = typer.Option(None, help="phi in radians"),
    phi_grid: str = typer.Option(None, help="phi grid start:stop:count"),
    n_parties: int = typer.Option(3, "--N", help="number of parties"),
    accel: str = typer.Option("none", help="accelerated parties, e.g. 2 or 1,2 or central"),
    grid: str = typer.Option("0:0:1", help="r grid start:stop:count"),
    grid2: str = typer.Option(None, help="r grid of the second accelerated party"),
    n_accel: str = typer.Option(None, help="comma list of n; the last n parties accelerate"),
    omega: bool = typer.Option(False, "--omega", help="grid values are Omega"),
    tail_tol: float = typer.Option(DEFAULT_TAIL_TOL, help="omitted probability per party"),
    n_max: int = typer.Option(None, help="fixed Rindler cutoff (overrides tail-tol)"),
    max_terms: int = typer.Option(MAX_TERMS, help="largest state built numerically"),
    mode: Mode = typer.Option(Mode.both, help="numeric, analytic or both"),
    normalized: bool = typer.Option(False, "--normalized", help="divide by inertial C_T"),
    workers: int = typer.Option(1, help="worker processes"),
    out: Path = typer.Option(None, help="CSV output path (stdout if unset)"),
    ):
    """
    Evaluate a grid of states and write one CSV row per grid point.
    """
    blocks = _sweep_blocks(
        family, theta, theta_grid, phi, phi_grid, n_parties, accel, grid,
        grid2, n_accel, omega, tail_tol, n_max, max_terms, mode, normalized)
    _check_points(blocks)
    _write(blocks, workers, out)


def _write(blocks, workers, out, preset=None):
    try:
        rows = run_sweep(blocks, workers)
    except UnsupportedPattern as err:
        raise typer.BadParameter(str(err))
    except UnruhcohError as err:
        _fail(err)
    try:
        text = write_csv(rows, out, preset)
    except OSError as err:
        _fail(err)
    if out is None:
        typer.echo(text, nl=False)
    else:
        typer.secho(f"wrote {len(rows)} rows to {out}", fg=typer.colors.MAGENTA, err=True)


@app.command(name="compare")
def compare_cmd(
    family: Family = typer.Option(None, help="state family"),
    preset: Preset = typer.Option(None, help="compare a preset instead"),
    theta: float = typer.Option(None, help="theta in radians"),
    theta_grid: str = typer.Option(None, help="theta grid start:stop:count"),
    phi: float = typer.Option(None, help="phi in radians"),
    phi_grid: str = typer.Option(None, help="phi grid start:stop:count"),
    n_parties: int = typer.Option(3, "--N", help="number of parties"),
    accel: str = typer.Option("none", help="accelerated parties, e.g. 2 or 1,2 or central"),
    grid: str = typer.Option("0:0:1", help="r grid start:stop:count"),
    grid2: str = typer.Option(None, help="r grid of the second accelerated party"),
    n_accel: str = typer.Option(None, help="comma list of n; the last n parties accelerate"),
    omega: bool = typer.Option(False, "--omega", help="grid values are Omega"),
    tail_tol: float = typer.Option(DEFAULT_TAIL_TOL, help="omitted probability per party"),
    n_max: int = typer.Option(None, help="fixed Rindler cutoff (overrides tail-tol)"),
    max_terms: int = typer.Option(MAX_TERMS, help="largest state built numerically"),
    workers: int = typer.Option(1, help="worker processes"),
    ):
    """
    Check the numeric pipeline against the closed forms over a grid.
    Exits 1 when the deviation exceeds the propagated tolerance.
    """
    if (family is None) == (preset is None):
        raise typer.BadParameter("give exactly one of --family or --preset")
    if preset is not None:
        blocks = preset_blocks(
            preset, Mode.both, tail_tol=tail_tol, n_max=n_max, max_terms=max_terms)
    else:
        blocks = _sweep_blocks(
            family, theta, theta_grid, phi, phi_grid, n_parties, accel, grid,
            grid2, n_accel, omega, tail_tol, n_max, max_terms, Mode.both, False)
        _check_points(blocks)

    try:
        result = compare(blocks, workers)
    except UnsupportedPattern as err:
        raise typer.BadParameter(str(err))
    except UnruhcohError as err:
        _fail(err)

    typer.echo(
        f"max_deviation={result.max_deviation:.6e} "
        f"tolerance={result.tolerance:.6e} points={result.npoints}")
    if not result.passed:
        worst = result.worst
        typer.secho(
            f"FAILED: {worst['family']} r1={worst['r1']} r2={worst['r2']} "
            f"{worst['metric']} deviates by {worst['deviation']:.3e}",
            fg=typer.colors.RED, err=True,
        )
        raise typer.Exit(1)
    typer.secho("passed", fg=typer.colors.MAGENTA, err=True)


@app.command(name="preset")
def preset_cmd(
    preset: Preset = typer.Option(..., help="figure to regenerate"),
    mode: Mode = typer.Option(Mode.analytic, help="numeric, analytic or both"),
    tail_tol: float = typer.Option(DEFAULT_TAIL_TOL, help="omitted probability per party"),
    n_max: int = typer.Option(None, help="fixed Rindler cutoff (overrides tail-tol)"),
    max_terms: int = typer.Option(MAX_TERMS, help="largest state built numerically"),
    workers: int = typer.Option(1, help="worker processes"),
    out: Path = typer.Option(None, help="CSV output path (stdout if unset)"),
    ):
    """
    Write the data behind one figure, headed by '# preset=NAME'.
    """
    _policy(tail_tol, n_max)
    blocks = preset_blocks(
        preset, mode, tail_tol=tail_tol, n_max=n_max, max_terms=max_terms)
    _write(blocks, workers, out, preset)


if __name__ == "__main__":
    app()
