"""Settings for hsx: built-in defaults, a TOML ``[hsx]`` table, then the environment.

CLI flags are applied on top by the command layer.
"""

from __future__ import annotations

import os
from collections.abc import Mapping
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any

from molcfg import ConfigLoader, TomlFileSource
from molcfg import ValidationError as CfgValidationError
from molcfg import validate as cfg_validate

from hsx.complex import DEFAULT_FACE_BUDGET
from hsx.errors import ConfigError
from hsx.partition import BOUND_TOL, DEFAULT_ORACLE_CAP, MEASURE_TOL
from hsx.spectra import EIGEN_TOL
from hsx.splitting import DEFAULT_SPLIT_BUDGET

#: Environment variable overriding the face budget.
FACE_BUDGET_ENV = "HSX_FACE_BUDGET"


@dataclass(frozen=True)
class HsxSettings:
    face_budget: int = DEFAULT_FACE_BUDGET
    oracle_cap: int = DEFAULT_ORACLE_CAP
    split_budget: int = DEFAULT_SPLIT_BUDGET
    tol_eig: float = EIGEN_TOL
    tol_measure: float = MEASURE_TOL
    tol_bound: float = BOUND_TOL

    def __post_init__(self) -> None:
        for item in fields(self):
            value = getattr(self, item.name)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ConfigError(
                    f"Setting {item.name} must be a number, got {value!r}",
                    setting=item.name,
                )
            if value <= 0:
                raise ConfigError(
                    f"Setting {item.name} must be positive, got {value!r}",
                    setting=item.name,
                )

    def merged(self, **overrides: Any) -> HsxSettings:
        """Copy with every non-None override applied."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


class _SettingsSchema:
    face_budget: int | None = None
    oracle_cap: int | None = None
    split_budget: int | None = None
    tol_eig: float | None = None
    tol_measure: float | None = None
    tol_bound: float | None = None


def default_config_path() -> Path:
    """``config.toml`` in the hsx project config dir (``MOLCRAFTS_HOME`` aware)."""
    from molcfg.paths import project_config_dir

    return project_config_dir("hsx") / "config.toml"


def load_settings(
    path: str | Path | None = None,
    env: Mapping[str, str] | None = None,
) -> HsxSettings:
    """Resolve settings from defaults, the ``[hsx]`` table and ``HSX_FACE_BUDGET``.

    A missing file is not an error; a malformed one is.
    """
    config_path = Path(path).expanduser() if path is not None else default_config_path()
    settings = HsxSettings()

    if config_path.exists():
        try:
            cfg = ConfigLoader([TomlFileSource(config_path)]).load()
        except Exception as exc:
            raise ConfigError(
                f"Cannot read settings file {config_path}: {exc}", path=str(config_path)
            ) from exc
        section = cfg.get("hsx")
        if section is not None:
            data: dict[str, Any] = (
                section.to_dict() if hasattr(section, "to_dict") else dict(section)
            )
            try:
                cfg_validate(data, _SettingsSchema, allow_extra=True)
            except CfgValidationError as exc:
                raise ConfigError(
                    f"[hsx] settings are invalid: {'; '.join(exc.errors)}",
                    path=str(config_path),
                ) from exc
            known = {item.name for item in fields(HsxSettings)}
            settings = settings.merged(**{k: v for k, v in data.items() if k in known})

    environ = os.environ if env is None else env
    raw = environ.get(FACE_BUDGET_ENV)
    if raw is not None and raw.strip():
        try:
            budget = int(raw)
        except ValueError:
            raise ConfigError(
                f"{FACE_BUDGET_ENV} must be an integer, got {raw!r}",
                setting="face_budget",
            ) from None
        settings = settings.merged(face_budget=budget)
    return settings
