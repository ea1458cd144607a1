"""Shared and private agent memory.

Shared memory is the team-visible log of RESPONSE sections; private
memory keeps each agent's own belief sections and never leaks into
another agent's prompt.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..sim.types import ResourceKind

ROLE_DISPLAY = {
    ResourceKind.FOOD: "FOOD_AGENT",
    ResourceKind.MEDICINE: "MEDICAL_AGENT",
    ResourceKind.SECURITY: "SECURITY_AGENT",
}


@dataclass(frozen=True)
class SharedEntry:
    round: int
    role: ResourceKind
    response_text: str


@dataclass
class SharedMemory:
    entries: list[SharedEntry] = field(default_factory=list)

    def append(self, round_index: int, role: ResourceKind, response_text: str) -> None:
        self.entries.append(SharedEntry(round_index, role, response_text))

    def window(self, current_round: int) -> list[SharedEntry]:
        """Entries from the current and the previous round only."""
        return [e for e in self.entries if e.round >= current_round - 1]

    def window_text(self, current_round: int) -> str:
        lines = [
            f"[round {e.round + 1}] {ROLE_DISPLAY[e.role]}: {e.response_text}"
            for e in self.window(current_round)
        ]
        return "\n".join(lines)


@dataclass(frozen=True)
class PrivateEntry:
    round: int
    internal_beliefs: str | None
    beliefs_on_others: str | None
    action_text: str


@dataclass
class PrivateMemory:
    entries: dict[ResourceKind, list[PrivateEntry]] = field(default_factory=dict)

    def append(
        self,
        role: ResourceKind,
        round_index: int,
        internal_beliefs: str | None,
        beliefs_on_others: str | None,
        action_text: str,
    ) -> None:
        self.entries.setdefault(role, []).append(
            PrivateEntry(round_index, internal_beliefs, beliefs_on_others, action_text)
        )

    def latest(self, role: ResourceKind) -> PrivateEntry | None:
        log = self.entries.get(role)
        return log[-1] if log else None

    def latest_text(self, role: ResourceKind) -> str:
        entry = self.latest(role)
        if entry is None:
            return ""
        parts = [f"Your own notes from round {entry.round + 1}:"]
        if entry.internal_beliefs:
            parts.append(f"Your INTERNAL_BELIEFS were:\n{entry.internal_beliefs}")
        if entry.beliefs_on_others:
            parts.append(f"Your BELIEFS_ON_OTHERS were:\n{entry.beliefs_on_others}")
        parts.append(f"You acted: {entry.action_text}")
        return "\n".join(parts)
