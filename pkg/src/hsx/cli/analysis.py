"""Analysis commands: analyze, sparse-cut, bounds, link-expansion, splittability, oracle."""

from __future__ import annotations

from typing import Annotated

import typer

from hsx.cli import _helpers
from hsx.cli._app import (
    _H_CONFIG,
    _H_FACE_BUDGET,
    _H_INPUT,
    _H_ORACLE_CAP,
    _H_OUT,
    _H_TOL_EIG,
    app,
    console,
)
from hsx.models import Command, WalkKind

InputArg = Annotated[str, typer.Argument(help=_H_INPUT)]
OutOpt = Annotated[str | None, typer.Option("--out", help=_H_OUT)]
ConfigOpt = Annotated[str | None, typer.Option(help=_H_CONFIG)]
FaceBudgetOpt = Annotated[
    int | None, typer.Option("--face-budget", help=_H_FACE_BUDGET)
]
OracleCapOpt = Annotated[int | None, typer.Option("--oracle-cap", help=_H_ORACLE_CAP)]
TolEigOpt = Annotated[float | None, typer.Option("--tol-eig", help=_H_TOL_EIG)]


@app.command()
def analyze(
    path: InputArg,
    levels: Annotated[
        str, typer.Option("--levels", help="Levels 'm,l' of the walk")
    ] = "1,2",
    walk: Annotated[
        WalkKind,
        typer.Option(
            "--walk",
            help="updown: N²_{m,l} and B²_{m,l}; swap: S_{m,l} and G_{m,l}; "
            "down: D_{m,l} and B_{m,l}",
        ),
    ] = WalkKind.updown,
    tau: Annotated[
        float | None, typer.Option("--tau", help="Also report rank_{>=tau}")
    ] = None,
    export: Annotated[
        bool, typer.Option("--export", help="Include the operator matrix")
    ] = False,
    face_budget: FaceBudgetOpt = None,
    tol_eig: TolEigOpt = None,
    out: OutOpt = None,
    config: ConfigOpt = None,
) -> None:
    """Spectra of a walk operator and of the graph that realises it."""
    from hsx.errors import ParameterError
    from hsx.models import parse_levels

    try:
        pair = parse_levels(levels)
    except ParameterError as exc:
        console.print(f"[red]Error:[/] {exc}")
        raise typer.Exit(1) from None
    _helpers.execute(
        Command.analyze,
        config,
        input_path=path,
        levels=pair,
        walk=walk,
        tau=tau,
        export=export,
        face_budget=face_budget,
        tol_eig=tol_eig,
        output_path=out,
    )


@app.command("sparse-cut")
def sparse_cut(
    path: InputArg,
    level: Annotated[
        int, typer.Option("--level", help="Level l (2..k) for ε_l and the lower bound")
    ] = 2,
    oracle_cap: OracleCapOpt = None,
    face_budget: FaceBudgetOpt = None,
    out: OutOpt = None,
    config: ConfigOpt = None,
) -> None:
    """Spectral sparse cut with its certificate; the oracle runs when n fits the cap."""
    _helpers.execute(
        Command.sparse_cut,
        config,
        input_path=path,
        level=level,
        oracle_cap=oracle_cap,
        face_budget=face_budget,
        output_path=out,
    )


@app.command()
def bounds(
    path: InputArg,
    subset: Annotated[
        str, typer.Option("--subset", help="Vertex set S as comma-separated ids")
    ],
    level: Annotated[
        int, typer.Option("--level", help="Level l (2..k) of B²_{1,l}")
    ] = 2,
    face_budget: FaceBudgetOpt = None,
    out: OutOpt = None,
    config: ConfigOpt = None,
) -> None:
    """Conductance of S in H and its boundary and expansion bounds against B²."""
    from hsx.errors import ParameterError
    from hsx.models import parse_subset

    try:
        chosen = parse_subset(subset)
    except ParameterError as exc:
        console.print(f"[red]Error:[/] {exc}")
        raise typer.Exit(1) from None
    _helpers.execute(
        Command.bounds,
        config,
        input_path=path,
        subset=chosen,
        level=level,
        face_budget=face_budget,
        output_path=out,
    )


@app.command("link-expansion")
def link_expansion(
    path: InputArg,
    face_budget: FaceBudgetOpt = None,
    tol_eig: TolEigOpt = None,
    out: OutOpt = None,
    config: ConfigOpt = None,
) -> None:
    """γ = max σ_2 over the link skeletons of X(≤k-2), with the worst face."""
    _helpers.execute(
        Command.link_expansion,
        config,
        input_path=path,
        face_budget=face_budget,
        tol_eig=tol_eig,
        output_path=out,
    )


@app.command()
def splittability(
    path: InputArg,
    tau: Annotated[float, typer.Option("--tau", help="Threshold τ in [-1, 1]")],
    r: Annotated[int, typer.Option("--r", help="Rank bound r")],
    face_budget: FaceBudgetOpt = None,
    tol_eig: TolEigOpt = None,
    out: OutOpt = None,
    config: ConfigOpt = None,
) -> None:
    """Whether some splitting tree keeps every swap graph's rank_{>=τ} at most r."""
    _helpers.execute(
        Command.splittability,
        config,
        input_path=path,
        tau=tau,
        r=r,
        face_budget=face_budget,
        tol_eig=tol_eig,
        output_path=out,
    )


@app.command()
def oracle(
    path: InputArg,
    oracle_cap: OracleCapOpt = None,
    out: OutOpt = None,
    config: ConfigOpt = None,
) -> None:
    """Exact minimum conductance by scanning every vertex subset."""
    _helpers.execute(
        Command.oracle,
        config,
        input_path=path,
        oracle_cap=oracle_cap,
        output_path=out,
    )
