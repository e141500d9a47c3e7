#!/usr/bin/env python3
"""hsx CLI: generate, analyze, partition and verify k-uniform hypergraphs.

The Typer application lives in :mod:`hsx.cli._app`; importing the command
modules here is what registers their commands on it. ``hsx.cli.main:app``
stays the console-script entry point.
"""

from __future__ import annotations

from hsx.cli import analysis, gen, verify  # noqa: F401  (registers commands)
from hsx.cli._app import app

__all__ = ["app"]


if __name__ == "__main__":
    app()
