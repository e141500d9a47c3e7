"""Run configuration for one hsx command.

Public: Command, WalkKind, RunConfig
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from enum import StrEnum
from pathlib import Path
from typing import Any

from hsx.errors import ConfigError, ParameterError


class Command(StrEnum):
    gen_sunflower = "gen sunflower"
    gen_cycle_link = "gen cycle-link"
    analyze = "analyze"
    sparse_cut = "sparse-cut"
    link_expansion = "link-expansion"
    splittability = "splittability"
    verify_sunflower = "verify sunflower"
    verify_cycle_link = "verify cycle-link"
    oracle = "oracle"
    bounds = "bounds"

    @property
    def needs_input(self) -> bool:
        return self in _INPUT_COMMANDS


_INPUT_COMMANDS = frozenset(
    {
        Command.analyze,
        Command.sparse_cut,
        Command.link_expansion,
        Command.splittability,
        Command.oracle,
        Command.bounds,
    }
)


class WalkKind(StrEnum):
    updown = "updown"
    swap = "swap"
    down = "down"


@dataclass(frozen=True)
class RunConfig:
    """Everything one invocation needs, already merged with settings.

    Levels are checked against k once the hypergraph is loaded; everything
    that can be checked without it is checked here.
    """

    command: Command
    input_path: Path | None = None
    output_path: Path | None = None
    r: int | None = None
    n: int | None = None
    k: int | None = None
    levels: tuple[int, int] | None = None
    level: int = 2
    walk: WalkKind = WalkKind.updown
    tau: float | None = None
    export: bool = False
    subset: tuple[int, ...] | None = None
    face_budget: int = 200_000
    oracle_cap: int = 24
    split_budget: int = 10_000
    tol_eig: float = 1e-9
    tol_measure: float = 1e-12
    tol_bound: float = 1e-9

    def __post_init__(self) -> None:
        if self.command.needs_input and self.input_path is None:
            raise ConfigError(f"'{self.command}' needs an input hypergraph file")
        if self.tau is not None and not -1.0 <= self.tau <= 1.0:
            raise ParameterError(
                f"Threshold tau must lie in [-1, 1], got {self.tau}", tau=self.tau
            )
        for name in ("face_budget", "oracle_cap", "split_budget"):
            value = getattr(self, name)
            if value < 1:
                raise ParameterError(f"{name} must be positive, got {value}", **{name: value})
        for name in ("tol_eig", "tol_measure", "tol_bound"):
            value = getattr(self, name)
            if not value > 0.0:
                raise ParameterError(f"{name} must be positive, got {value}", **{name: value})
        for name in ("r", "n", "k"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ParameterError(f"{name} must be positive, got {value}", **{name: value})
        if self.levels is not None:
            m, l = self.levels
            if m < 1 or l < 1:
                raise ParameterError(
                    f"Levels must be at least 1, got {m},{l}", levels=self.levels
                )
        if self.subset is not None and any(v < 0 for v in self.subset):
            raise ParameterError(
                f"Subset vertices must be non-negative, got {list(self.subset)}",
                subset=self.subset,
            )

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["command"] = self.command.value
        data["walk"] = self.walk.value
        if self.subset is not None:
            data["subset"] = list(self.subset)
        for key in ("input_path", "output_path"):
            if data[key] is not None:
                data[key] = str(data[key])
        return data

    def tolerances(self) -> dict[str, float]:
        return {
            "eigen": self.tol_eig,
            "measure": self.tol_measure,
            "bound": self.tol_bound,
        }


def parse_levels(text: str) -> tuple[int, int]:
    """``"m,l"`` to ``(m, l)``."""
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 2:
        raise ParameterError(f"Levels must look like 'm,l', got {text!r}", levels=text)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ParameterError(
            f"Levels must be two integers, got {text!r}", levels=text
        ) from None


def parse_subset(text: str) -> tuple[int, ...]:
    """``"0,2,5"`` to ``(0, 2, 5)``."""
    parts = [part.strip() for part in text.split(",") if part.strip()]
    if not parts:
        raise ParameterError("Subset must list at least one vertex", subset=text)
    try:
        return tuple(int(part) for part in parts)
    except ValueError:
        raise ParameterError(
            f"Subset must be comma-separated integers, got {text!r}", subset=text
        ) from None
