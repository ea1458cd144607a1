"""Deterministic replay of saved transcripts.

Replay re-runs the pure dynamics over the committed actions and demands
byte-for-byte equality with every stored snapshot.
"""
from __future__ import annotations

import json
from pathlib import Path

from ..sim.engine import apply_action, end_of_round, final_score, initial_world, resupply
from ..sim.types import SimParams, Topology
from .turn import ReplayTurn


def load_transcript_json(path: str | Path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _canon(snapshot: dict) -> str:
    return json.dumps(snapshot, sort_keys=True, separators=(",", ":"))


def replay_check(transcript: dict) -> list[str]:
    """Recompute the trial from committed actions; returns mismatch descriptions."""
    problems: list[str] = []
    params = SimParams.from_json(transcript["params"])
    topology = Topology.from_json(transcript["topology"])
    world = initial_world(params, topology)
    if _canon(world.to_json()) != _canon(transcript["initial_state"]):
        problems.append("initial state differs")
    for round_log in transcript["rounds"]:
        for turn_json in round_log["turns"]:
            turn = ReplayTurn.from_json(turn_json)
            world = resupply(world, turn.role)
            if turn.committed and turn.action is not None:
                world = apply_action(world, turn.role, turn.action)
        if not transcript.get("aborted") or round_log is not transcript["rounds"][-1]:
            world = end_of_round(world)
        if _canon(world.to_json()) != _canon(round_log["end_state"]):
            problems.append(f"state after round {round_log['round'] + 1} differs")
    expected_score = transcript.get("final_score")
    if expected_score is not None and not transcript.get("aborted"):
        recomputed = final_score(world)
        if recomputed != expected_score:
            problems.append(f"final score differs: stored {expected_score}, replayed {recomputed}")
    return problems
