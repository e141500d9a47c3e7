"""Verification commands: verify sunflower, verify cycle-link."""

from __future__ import annotations

from typing import Annotated

import typer

from hsx.cli import _helpers
from hsx.cli._app import (
    _H_CONFIG,
    _H_FACE_BUDGET,
    _H_K,
    _H_ORACLE_CAP,
    _H_OUT,
    _H_TOL_EIG,
    app,
)
from hsx.models import Command

verify_app = typer.Typer(
    name="verify",
    help="Check every numeric claim about a construction; exit 2 if any fails.",
    no_args_is_help=True,
    rich_markup_mode="rich",
)
app.add_typer(verify_app, name="verify")


@verify_app.command("sunflower")
def verify_sunflower(
    r: Annotated[int, typer.Option("--r", help="Number of petals (edges)")],
    k: Annotated[int, typer.Option("--k", help=_H_K)],
    oracle_cap: Annotated[
        int | None, typer.Option("--oracle-cap", help=_H_ORACLE_CAP)
    ] = None,
    face_budget: Annotated[
        int | None, typer.Option("--face-budget", help=_H_FACE_BUDGET)
    ] = None,
    tol_eig: Annotated[float | None, typer.Option("--tol-eig", help=_H_TOL_EIG)] = None,
    out: Annotated[str | None, typer.Option("--out", help=_H_OUT)] = None,
    config: Annotated[str | None, typer.Option(help=_H_CONFIG)] = None,
) -> None:
    """Unit eigenvalues, expansion >= 1/k and non-splittability of sunflower(r, k)."""
    _helpers.execute(
        Command.verify_sunflower,
        config,
        r=r,
        k=k,
        oracle_cap=oracle_cap,
        face_budget=face_budget,
        tol_eig=tol_eig,
        output_path=out,
    )


@verify_app.command("cycle-link")
def verify_cycle_link(
    n: Annotated[int, typer.Option("--n", help="Cycle length (n >= 3k)")],
    k: Annotated[int, typer.Option("--k", help=_H_K)],
    oracle_cap: Annotated[
        int | None, typer.Option("--oracle-cap", help=_H_ORACLE_CAP)
    ] = None,
    face_budget: Annotated[
        int | None, typer.Option("--face-budget", help=_H_FACE_BUDGET)
    ] = None,
    tol_eig: Annotated[float | None, typer.Option("--tol-eig", help=_H_TOL_EIG)] = None,
    out: Annotated[str | None, typer.Option("--out", help=_H_OUT)] = None,
    config: Annotated[str | None, typer.Option(help=_H_CONFIG)] = None,
) -> None:
    """Cycle link, poor link expansion and expansion >= 1/(3k)^k of cycle_link(n, k)."""
    _helpers.execute(
        Command.verify_cycle_link,
        config,
        n=n,
        k=k,
        oracle_cap=oracle_cap,
        face_budget=face_budget,
        tol_eig=tol_eig,
        output_path=out,
    )
