"""Helpers shared by the hsx command modules.

Commands reach these through the module (``_helpers.execute(...)``) so tests
have one stable patch target regardless of which command they exercise.
"""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING, Any

import typer

from hsx.cli._app import console

if TYPE_CHECKING:
    from hsx.config import HsxSettings
    from hsx.models import Command


def settings(config_path: str | None, **overrides: Any) -> HsxSettings:
    """Settings from config file and environment with CLI flags on top."""
    from hsx.config import load_settings
    from hsx.errors import ConfigError

    try:
        return load_settings(config_path).merged(**overrides)
    except ConfigError as exc:
        console.print(f"[red]Error:[/] {exc}")
        raise typer.Exit(1) from None


def execute(command: Command, config_path: str | None, **fields: Any) -> None:
    """Build the RunConfig, run it, print the report and exit with its code.

    ``fields`` holds the RunConfig fields; the setting-backed ones
    (``face_budget``, ``oracle_cap``, ``tol_eig`` …) may be ``None`` to fall
    back to the resolved settings.
    """
    from hsx.errors import HsxError
    from hsx.models import RunConfig
    from hsx.runner import EXIT_INPUT, run

    setting_names = (
        "face_budget",
        "oracle_cap",
        "split_budget",
        "tol_eig",
        "tol_measure",
        "tol_bound",
    )
    resolved = settings(
        config_path, **{name: fields.pop(name, None) for name in setting_names}
    )
    for key in ("input_path", "output_path"):
        if fields.get(key) is not None:
            fields[key] = Path(fields[key])
    try:
        config = RunConfig(
            command=command,
            **fields,
            **{name: getattr(resolved, name) for name in setting_names},
        )
    except HsxError as exc:
        console.print(f"[red]Error:[/] {exc}")
        raise typer.Exit(EXIT_INPUT) from None

    result = run(config)
    if result.error is not None:
        console.print(f"[red]Error:[/] {result.error}")
    elif result.text is not None and config.output_path is None:
        typer.echo(result.text, nl=False)
    elif config.output_path is not None:
        console.print(f"Report written to [cyan]{config.output_path}[/]")
    if result.exit_code == 2:
        console.print("[yellow]One or more checks failed[/]")
    raise typer.Exit(result.exit_code)
