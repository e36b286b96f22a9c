"""Optional TOML/JSON campaign config with per-identity overrides.

Layout::

    [defaults]
    trials = 10
    n_max = 4

    [identities."eq-magic"]
    trials = 3
    eps = 1e-10
    magnitude = "1/2"
"""

from __future__ import annotations

import json
from dataclasses import fields, replace
from fractions import Fraction
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .campaign import Settings

_KEYS = {f.name for f in fields(Settings)}


class ConfigError(ValueError):
    pass


def load(path: str | Path) -> dict:
    path = Path(path)
    text = path.read_text()
    try:
        if path.suffix.lower() == ".json":
            data = json.loads(text)
        else:
            data = tomllib.loads(text)
    except (json.JSONDecodeError, tomllib.TOMLDecodeError) as exc:
        raise ConfigError(f"{path}: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: top level must be a table")
    unknown = set(data) - {"defaults", "identities"}
    if unknown:
        raise ConfigError(f"{path}: unknown sections {sorted(unknown)}")
    _overrides(data.get("defaults", {}), "defaults")
    for id, table in data.get("identities", {}).items():
        _overrides(table, id)
    return data


def _overrides(table: dict, where: str) -> dict:
    bad = set(table) - _KEYS
    if bad:
        raise ConfigError(f"{where}: unknown keys {sorted(bad)}")
    out = dict(table)
    if "magnitude" in out:
        out["magnitude"] = Fraction(str(out["magnitude"]))
    return out


def settings_for(id: str, base: Settings, config: dict | None, flags: dict) -> Settings:
    """Defaults < config defaults < config per-id table < explicit CLI flags."""
    s = base
    if config:
        s = replace(s, **_overrides(config.get("defaults", {}), "defaults"))
        s = replace(s, **_overrides(config.get("identities", {}).get(id, {}), id))
    return replace(s, **{k: v for k, v in flags.items() if v is not None})
