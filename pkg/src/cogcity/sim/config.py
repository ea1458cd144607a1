"""Config-file loading for simulation parameters and the district graph.

Files may be TOML or JSON; the format is picked by extension.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .types import SimParams, Topology

_SIM_KEYS = {
    "consumption_rate",
    "capacity",
    "initial_health",
    "initial_resource_level",
    "rounds",
    "supply_district_resource_level",
}


def load_config_file(path: str | Path) -> dict:
    path = Path(path)
    if path.suffix.lower() == ".toml":
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    if path.suffix.lower() == ".json":
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    raise ValueError(f"unsupported config format {path.suffix!r}; use .toml or .json")


def sim_params_from_config(data: dict) -> SimParams:
    section = data.get("sim", {})
    unknown = set(section) - _SIM_KEYS
    if unknown:
        raise ValueError(f"unknown sim config keys: {sorted(unknown)}")
    return SimParams(**section)


def topology_from_config(data: dict) -> Topology:
    section = data.get("topology")
    if not section:
        return Topology()
    return Topology(
        districts=tuple(section["districts"]),
        edges=tuple((a, b) for a, b in section["edges"]),
    )


def load_sim_config(path: str | Path) -> tuple[SimParams, Topology]:
    data = load_config_file(path)
    return sim_params_from_config(data), topology_from_config(data)
