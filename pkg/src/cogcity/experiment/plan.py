"""Experiment plans: the cell matrix, trial counts, and seed derivation."""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from pathlib import Path

from ..harness.cognitive import CognitiveConfig
from ..policies.llm import EndpointConfig
from ..sim.config import load_config_file, sim_params_from_config, topology_from_config
from ..sim.types import SimParams, Topology


def derive_seed(master_seed: int, *parts: object) -> int:
    """Stable 63-bit seed from the master seed and any labels."""
    text = "/".join([str(master_seed), *(str(p) for p in parts)])
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") >> 1


@dataclass(frozen=True)
class PlanCell:
    cell_id: str
    policy: str  # heuristic | llm | replay
    config: CognitiveConfig
    cassette_dir: str = ""
    endpoint: EndpointConfig | None = None

    def cassette_path(self, trial: int) -> Path:
        return Path(self.cassette_dir) / f"{self.cell_id}__t{trial}.json"


@dataclass(frozen=True)
class ExperimentPlan:
    cells: tuple[PlanCell, ...]
    trials_per_cell: int = 10
    master_seed: int = 0
    params: SimParams = field(default_factory=SimParams)
    topology: Topology = field(default_factory=Topology)
    resamples: int = 10_000
    confidence: float = 0.95
    workers: int = 1

    def __post_init__(self) -> None:
        if self.trials_per_cell < 1:
            raise ValueError("trials_per_cell must be at least 1")
        if self.resamples < 100:
            raise ValueError("resamples must be at least 100")
        ids = [c.cell_id for c in self.cells]
        if len(set(ids)) != len(ids):
            raise ValueError("cell ids must be unique")

    def trial_seed(self, cell_id: str, trial: int) -> int:
        return derive_seed(self.master_seed, cell_id, trial)

    def to_json(self) -> dict:
        return {
            "trials_per_cell": self.trials_per_cell,
            "master_seed": self.master_seed,
            "resamples": self.resamples,
            "confidence": self.confidence,
            "workers": self.workers,
            "sim": self.params.to_json(),
            "topology": self.topology.to_json(),
            "cells": [
                {
                    "id": c.cell_id,
                    "policy": c.policy,
                    "config": c.config.name,
                    "cassette_dir": c.cassette_dir,
                    "endpoint": c.endpoint.to_json() if c.endpoint else None,
                }
                for c in self.cells
            ],
        }


def _cell_from_dict(data: dict) -> PlanCell:
    endpoint = None
    if data.get("endpoint"):
        endpoint = EndpointConfig(**data["endpoint"])
    policy = data["policy"]
    if policy not in {"heuristic", "llm", "replay"}:
        raise ValueError(f"unknown policy kind {policy!r}")
    if policy == "replay" and not data.get("cassette_dir"):
        raise ValueError(f"cell {data['id']!r}: replay policy needs cassette_dir")
    if policy == "llm" and endpoint is None:
        raise ValueError(f"cell {data['id']!r}: llm policy needs an endpoint table")
    return PlanCell(
        cell_id=data["id"],
        policy=policy,
        config=CognitiveConfig.from_name(data["config"]),
        cassette_dir=data.get("cassette_dir", ""),
        endpoint=endpoint,
    )


def plan_from_dict(data: dict) -> ExperimentPlan:
    bootstrap = data.get("bootstrap", {})
    return ExperimentPlan(
        cells=tuple(_cell_from_dict(c) for c in data["cells"]),
        trials_per_cell=data.get("trials_per_cell", 10),
        master_seed=data.get("master_seed", 0),
        params=sim_params_from_config(data),
        topology=topology_from_config(data),
        resamples=bootstrap.get("resamples", 10_000),
        confidence=bootstrap.get("confidence", 0.95),
        workers=data.get("workers", 1),
    )


def load_plan(path: str | Path) -> ExperimentPlan:
    return plan_from_dict(load_config_file(path))
