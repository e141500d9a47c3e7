"""The Typer application object and the constants every command shares.

Split out so command modules can import ``app`` without importing each other.
"""

from __future__ import annotations

from typing import Annotated

import typer
from rich.console import Console

_H_INPUT = "Hypergraph JSON file ({\"k\", \"vertices\", \"edges\", \"weights\"?})"
_H_OUT = "Write the JSON report here instead of stdout"
_H_CONFIG = "Path to config.toml (default via molcfg / ~/.molcrafts/hsx/…)"
_H_ORACLE_CAP = "Largest vertex count the exhaustive oracle will scan"
_H_FACE_BUDGET = "Maximum number of faces in the induced complex (env HSX_FACE_BUDGET)"
_H_TOL_EIG = "Tolerance for eigenvalue comparisons"
_H_K = "Uniformity k (edge size)"

_APP_HELP = """\
Spectral toolkit for [bold]k-uniform hypergraphs[/] and the weighted \
simplicial complexes they induce.

[bold]Generate[/]   gen sunflower · gen cycle-link
[bold]Analyze[/]    analyze · link-expansion · splittability
[bold]Partition[/]  sparse-cut · bounds · oracle
[bold]Verify[/]     verify sunflower · verify cycle-link

Every command prints a JSON report. Exit codes: [cyan]0[/] ok, [cyan]1[/] \
input error, [cyan]2[/] a claim or certificate check failed, [cyan]3[/] \
budget exceeded.
"""

app = typer.Typer(
    name="hsx",
    help=_APP_HELP,
    no_args_is_help=True,
    rich_markup_mode="rich",
    context_settings={"help_option_names": ["-h", "--help"]},
)

console = Console(stderr=True)


def _version_callback(requested: bool) -> None:
    if not requested:
        return
    from importlib.metadata import PackageNotFoundError, version

    try:
        print(version("molcrafts-hsx"))
    except PackageNotFoundError:  # running from a source tree, not installed
        print("unknown")
    raise typer.Exit()


@app.callback()
def _main(
    version: Annotated[
        bool,
        typer.Option(
            "--version",
            "-V",
            callback=_version_callback,
            is_eager=True,
            help="Show the installed hsx version and exit.",
        ),
    ] = False,
) -> None:
    """Root callback; exists so ``hsx --version`` works before any command."""

