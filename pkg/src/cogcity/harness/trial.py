"""Whole-trial orchestration and the serialized transcript."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..policies.base import Policy, PolicyError
from ..sim.engine import end_of_round, final_score, initial_world
from ..sim.types import ResourceKind, ROLE_ORDER, SimParams, Topology
from ..verify.theory import FixedTheory
from .cognitive import CognitiveConfig
from .memory import PrivateMemory, SharedMemory
from .turn import TurnRecord, run_agent_turn

TRANSCRIPT_SCHEMA_VERSION = 1


@dataclass
class RoundLog:
    round: int
    turns: list[TurnRecord]
    end_state: dict  # WorldState JSON snapshot after end_of_round

    def to_json(self) -> dict:
        return {
            "round": self.round,
            "turns": [t.to_json() for t in self.turns],
            "end_state": self.end_state,
        }


@dataclass
class Transcript:
    params: SimParams
    topology: Topology
    config: CognitiveConfig
    seed: int
    policy_label: str
    initial_state: dict
    rounds: list[RoundLog] = field(default_factory=list)
    final_score: float | None = None
    aborted: bool = False
    abort_reason: str = ""

    def to_json(self) -> dict:
        return {
            "schema_version": TRANSCRIPT_SCHEMA_VERSION,
            "params": self.params.to_json(),
            "topology": self.topology.to_json(),
            "config": self.config.to_json(),
            "seed": self.seed,
            "policy_label": self.policy_label,
            "initial_state": self.initial_state,
            "rounds": [r.to_json() for r in self.rounds],
            "final_score": self.final_score,
            "aborted": self.aborted,
            "abort_reason": self.abort_reason,
        }

    def canonical_json(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json(), fh, indent=2, sort_keys=True)
            fh.write("\n")

    @property
    def turn_records(self) -> list[TurnRecord]:
        return [t for r in self.rounds for t in r.turns]


class TrialAbort(Exception):
    """Policy transport failure; carries the partial transcript."""

    def __init__(self, reason: str, partial: Transcript):
        super().__init__(reason)
        partial.aborted = True
        partial.abort_reason = reason
        self.partial = partial


def run_trial(
    params: SimParams,
    topology: Topology,
    config: CognitiveConfig,
    policies: dict[ResourceKind, Policy],
    seed: int,
    policy_label: str = "",
) -> Transcript:
    """Run rounds x three agent turns, then close each round; score at the end."""
    missing = [r.value for r in ROLE_ORDER if r not in policies]
    if missing:
        raise ValueError(f"no policy bound for roles: {missing}")
    world = initial_world(params, topology)
    theory = FixedTheory.for_world(topology, params.capacity)
    shared = SharedMemory()
    private = PrivateMemory()
    transcript = Transcript(
        params=params,
        topology=topology,
        config=config,
        seed=seed,
        policy_label=policy_label,
        initial_state=world.to_json(),
    )
    for round_index in range(params.rounds):
        turns: list[TurnRecord] = []
        for role in ROLE_ORDER:
            try:
                world, record = run_agent_turn(
                    world, role, config, policies[role], shared, private, theory
                )
            except PolicyError as err:
                transcript.rounds.append(
                    RoundLog(round=round_index, turns=turns, end_state=world.to_json())
                )
                raise TrialAbort(
                    f"policy failure on round {round_index + 1}, {role.value}: {err}",
                    transcript,
                ) from err
            turns.append(record)
        world = end_of_round(world)
        transcript.rounds.append(
            RoundLog(round=round_index, turns=turns, end_state=world.to_json())
        )
    transcript.final_score = final_score(world)
    return transcript
