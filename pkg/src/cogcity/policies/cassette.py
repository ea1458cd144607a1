"""Record/replay cassettes for hermetic end-to-end runs.

A cassette is an ordered list of (prompt fingerprint, response text).
Recording wraps a live policy; replay answers from the file and insists
the conversation matches what was recorded, call by call.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .base import ChatMessage, FingerprintMismatch, Policy, TurnContext


def fingerprint_messages(messages: Sequence[ChatMessage]) -> str:
    canonical = json.dumps([m.to_json() for m in messages], sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


@dataclass
class Cassette:
    entries: list[tuple[str, str]] = field(default_factory=list)  # (fingerprint, response)

    def to_json(self) -> dict:
        return {
            "entries": [{"fingerprint": f, "response": r} for f, r in self.entries]
        }

    @classmethod
    def from_json(cls, data: dict) -> "Cassette":
        return cls(entries=[(e["fingerprint"], e["response"]) for e in data["entries"]])

    def save(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json(), fh, indent=2, sort_keys=True)
            fh.write("\n")

    @classmethod
    def load(cls, path: str | Path) -> "Cassette":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


@dataclass
class RecordingPolicy:
    inner: Policy
    cassette: Cassette

    def respond(self, messages: Sequence[ChatMessage], ctx: TurnContext) -> str:
        out = self.inner.respond(messages, ctx)
        self.cassette.entries.append((fingerprint_messages(messages), out))
        return out


@dataclass
class ReplayPolicy:
    cassette: Cassette
    cursor: int = 0

    def respond(self, messages: Sequence[ChatMessage], ctx: TurnContext) -> str:
        if self.cursor >= len(self.cassette.entries):
            raise FingerprintMismatch(self.cursor, "cassette exhausted")
        expected, response = self.cassette.entries[self.cursor]
        actual = fingerprint_messages(messages)
        if actual != expected:
            raise FingerprintMismatch(
                self.cursor, f"prompt fingerprint {actual[:12]} != recorded {expected[:12]}"
            )
        self.cursor += 1
        return response


def cassette_roundtrip(inner: Policy | None, cassette: Cassette, mode: str) -> Policy:
    if mode == "record":
        if inner is None:
            raise ValueError("record mode needs a live policy to wrap")
        return RecordingPolicy(inner=inner, cassette=cassette)
    if mode == "replay":
        return ReplayPolicy(cassette=cassette)
    raise ValueError(f"unknown cassette mode {mode!r}")
