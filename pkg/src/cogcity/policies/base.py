"""Policy protocol: anything that can answer a turn prompt with text."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, Sequence

from ..harness.cognitive import CognitiveConfig
from ..sim.types import Observation, ResourceKind


@dataclass(frozen=True)
class ChatMessage:
    role: str  # system | user | assistant
    content: str

    def to_json(self) -> dict:
        return {"role": self.role, "content": self.content}

    @classmethod
    def from_json(cls, data: dict) -> "ChatMessage":
        return cls(role=data["role"], content=data["content"])


@dataclass(frozen=True)
class TurnContext:
    """Structured view of the turn, for policies that don't read prose.

    LLM-backed policies answer from the rendered messages alone; the
    deterministic baseline works from this instead.
    """

    role: ResourceKind
    config: CognitiveConfig
    observation: Observation
    shared_window: str


class Policy(Protocol):
    def respond(self, messages: Sequence[ChatMessage], ctx: TurnContext) -> str:
        ...


class PolicyError(Exception):
    """Transport-level or cassette failure; aborts the trial."""


class TransportTimeout(PolicyError):
    pass


class TransportHttpStatus(PolicyError):
    def __init__(self, code: int, detail: str = ""):
        super().__init__(f"endpoint returned HTTP {code}{': ' + detail if detail else ''}")
        self.code = code


class MalformedProviderResponse(PolicyError):
    pass


class FingerprintMismatch(PolicyError):
    def __init__(self, index: int, detail: str):
        super().__init__(f"cassette mismatch at call {index}: {detail}")
        self.index = index
