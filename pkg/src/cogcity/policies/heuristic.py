"""Deterministic baseline policy.

A pure function of the observation, the cognitive config, and the shared
message window. It lets the whole pipeline run end to end with no
network: its beliefs are written straight from ground truth, so they
always verify, and its actions are always legal.

Decision rules, in order:
  1. empty-handed -> head back to the depot;
  2. standing in a needy district (own stock under 20) -> top it up past
     the penalty threshold with a margin of 10;
  3. otherwise -> walk toward the lowest-stock district it knows about,
     treating districts it has never heard of as empty (level 0), ties
     broken by district index.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from ..harness.cognitive import CognitiveConfig
from ..harness.memory import ROLE_DISPLAY
from ..sim.types import Observation, ResourceKind, SUPPLY_DISTRICT, Topology
from .base import ChatMessage, TurnContext

_STATUS_RE = re.compile(r"\bstatus (d\d+)((?: \w+=\d+)+)")

SUPPLY_TARGET = 20  # stock at or above this costs no health
SUPPLY_MARGIN = 10


def _shortest_hop(topology: Topology, src: str, dst: str) -> str:
    """First step of a shortest path, lowest district index on ties."""
    dist = {dst: 0}
    queue = deque([dst])
    while queue:
        node = queue.popleft()
        for n in topology.neighbors(node):
            if n not in dist:
                dist[n] = dist[node] + 1
                queue.append(n)
    neighbors = topology.neighbors(src)
    return min(neighbors, key=lambda n: (dist.get(n, len(topology.districts) + 1), n))


def _known_levels(obs: Observation, shared_window: str) -> dict[str, int]:
    """Own-kind stock levels: teammates' status lines, own eyes last."""
    known: dict[str, int] = {}
    for match in _STATUS_RE.finditer(shared_window):
        district = match.group(1)
        for key, value in re.findall(r"(\w+)=(\d+)", match.group(2)):
            if key == obs.role.value:
                known[district] = int(value)
    if not obs.at_depot:
        known[obs.location] = obs.local_resources[obs.role]
    return known


def heuristic_respond(
    obs: Observation,
    config: CognitiveConfig,
    shared_window: str,
    topology: Topology | None = None,
) -> str:
    topology = topology or Topology()
    kind = obs.role.value
    known = _known_levels(obs, shared_window)

    plan_note = ""
    if obs.inventory == 0:
        hop = _shortest_hop(topology, obs.location, SUPPLY_DISTRICT)
        action = f"MOVE({hop})"
        plan_atom = f"plan_move({hop})."
        plan_note = f"restocking via {hop}"
    elif not obs.at_depot and obs.local_resources[obs.role] < SUPPLY_TARGET:
        level = obs.local_resources[obs.role]
        amount = min(obs.inventory, SUPPLY_TARGET - level + SUPPLY_MARGIN)
        action = f"SUPPLY_RESOURCE({amount})"
        plan_atom = f"plan_supply({amount})."
        plan_note = f"supplying {amount} {kind} here"
    else:
        candidates = [d for d in topology.districts if d != SUPPLY_DISTRICT and d != obs.location]
        target = min(candidates, key=lambda d: (known.get(d, 0), d))
        hop = _shortest_hop(topology, obs.location, target)
        action = f"MOVE({hop})"
        plan_atom = f"plan_move({hop})."
        plan_note = f"heading to {target} via {hop}"

    sections: list[str] = []
    if config.ib_enabled:
        beliefs = [f"at(self, {obs.location}).", f"carrying({kind}, {obs.inventory})."]
        beliefs += [f"health({d}, {h})." for d, h in sorted(obs.district_health.items())]
        if not obs.at_depot:
            beliefs += [
                f"resource_level({obs.location}, {k.value}, {obs.local_resources[k]})."
                for k in ResourceKind
            ]
        beliefs.append(plan_atom)
        sections.append("INTERNAL_BELIEFS:\n" + "\n".join(beliefs))

    if config.tom_enabled:
        others = [r for r in ResourceKind if r is not obs.role]
        lines = [
            f"{ROLE_DISPLAY[r]} will keep {r.value} stocked and is likely topping up the scarcest district it knows."
            for r in others
        ]
        lines.append("I pick my target assuming they cover their own resource, not mine.")
        sections.append("BELIEFS_ON_OTHERS:\n" + "\n".join(lines))

    if obs.at_depot:
        status = f"at the depot, fully restocked with {kind}"
    else:
        stocks = " ".join(f"{k.value}={obs.local_resources[k]}" for k in ResourceKind)
        status = f"status {obs.location} {stocks}"
    sections.append(f"RESPONSE:\n{status} | {plan_note}")
    sections.append(f"ACTION:\n{action}")
    return "\n\n".join(sections)


@dataclass(frozen=True)
class HeuristicPolicy:
    topology: Topology = field(default_factory=Topology)

    def respond(self, messages: Sequence[ChatMessage], ctx: TurnContext) -> str:
        return heuristic_respond(ctx.observation, ctx.config, ctx.shared_window, self.topology)
