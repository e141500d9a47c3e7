"""Generator commands: gen sunflower, gen cycle-link."""

from __future__ import annotations

from typing import Annotated

import typer

from hsx.cli import _helpers
from hsx.cli._app import _H_K, _H_OUT, app
from hsx.models import Command

gen_app = typer.Typer(
    name="gen",
    help="Write one of the two constructions as hypergraph JSON.",
    no_args_is_help=True,
    rich_markup_mode="rich",
)
app.add_typer(gen_app, name="gen")


@gen_app.command("sunflower")
def gen_sunflower(
    r: Annotated[int, typer.Option("--r", help="Number of petals (edges)")],
    k: Annotated[int, typer.Option("--k", help=_H_K)],
    out: Annotated[str | None, typer.Option("--out", help=_H_OUT)] = None,
) -> None:
    """r edges of size k meeting pairwise in vertex 0."""
    _helpers.execute(Command.gen_sunflower, None, r=r, k=k, output_path=out)


@gen_app.command("cycle-link")
def gen_cycle_link(
    n: Annotated[int, typer.Option("--n", help="Cycle length (n >= 3k)")],
    k: Annotated[int, typer.Option("--k", help=_H_K)],
    out: Annotated[str | None, typer.Option("--out", help=_H_OUT)] = None,
) -> None:
    """All k-subsets of n vertices plus the n-cycle lifted by a k-2 vertex tail."""
    _helpers.execute(Command.gen_cycle_link, None, n=n, k=k, output_path=out)
