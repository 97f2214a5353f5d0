"""Run configuration: command-line flags > key=value file > defaults."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

from .state import HARD_N_MAX

L_MAX_LIMIT = 6


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    n_max: int = 8
    l_max: int = 6
    output_format: str = "csv"
    output_path: Optional[str] = None
    tolerance: float = 1e-10

    def __post_init__(self):
        if not 1 <= self.n_max <= HARD_N_MAX:
            raise ConfigError(f"n_max must be in 1..{HARD_N_MAX}, got {self.n_max}")
        if not 1 <= self.l_max <= L_MAX_LIMIT:
            raise ConfigError(f"l_max must be in 1..{L_MAX_LIMIT}, got {self.l_max}")
        if self.output_format not in ("csv", "json"):
            raise ConfigError(f"format must be csv or json, got {self.output_format!r}")
        if not self.tolerance > 0:
            raise ConfigError(f"tolerance must be positive, got {self.tolerance}")


_ALIASES = {
    "n_max": "n_max", "n-max": "n_max",
    "l_max": "l_max", "l-max": "l_max",
    "format": "output_format", "output_format": "output_format",
    "out": "output_path", "output_path": "output_path",
    "tol": "tolerance", "tolerance": "tolerance",
}


def _coerce(key: str, raw: str):
    if key in ("n_max", "l_max"):
        return int(raw)
    if key == "tolerance":
        return float(raw)
    return raw


def read_config_file(path: str | os.PathLike) -> dict:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    values = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value")
        key, raw = (part.strip() for part in line.split("=", 1))
        if key not in _ALIASES:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        name = _ALIASES[key]
        try:
            values[name] = _coerce(name, raw)
        except ValueError as exc:
            raise ConfigError(f"{path}:{lineno}: bad value for {key}: {raw!r}") from exc
    return values


def resolve(config_file: Optional[str] = None, **flags) -> RunConfig:
    """Merge defaults, then the config file, then any flag that is not None."""
    values = {}
    if config_file:
        values.update(read_config_file(config_file))
    values.update({k: v for k, v in flags.items() if v is not None})
    return replace(RunConfig(), **values) if values else RunConfig()
