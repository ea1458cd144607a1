"""The two cognitive toggles and their four named combinations."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CognitiveConfig:
    tom_enabled: bool = False
    ib_enabled: bool = False

    @property
    def name(self) -> str:
        return {
            (False, False): "base",
            (True, False): "tom",
            (False, True): "ib",
            (True, True): "tom_ib",
        }[(self.tom_enabled, self.ib_enabled)]

    @classmethod
    def from_name(cls, name: str) -> "CognitiveConfig":
        table = {
            "base": cls(False, False),
            "tom": cls(True, False),
            "ib": cls(False, True),
            "tom_ib": cls(True, True),
        }
        if name not in table:
            raise ValueError(f"unknown configuration {name!r}; pick one of {sorted(table)}")
        return table[name]

    def to_json(self) -> dict:
        return {"tom_enabled": self.tom_enabled, "ib_enabled": self.ib_enabled}

    @classmethod
    def from_json(cls, data: dict) -> "CognitiveConfig":
        return cls(tom_enabled=data["tom_enabled"], ib_enabled=data["ib_enabled"])


ALL_CONFIGS = (
    CognitiveConfig(False, False),
    CognitiveConfig(True, False),
    CognitiveConfig(False, True),
    CognitiveConfig(True, True),
)
