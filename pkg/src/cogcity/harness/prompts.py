"""Prompt assembly from the editable template files in templates/."""
from __future__ import annotations

from functools import lru_cache
from pathlib import Path

from ..policies.base import ChatMessage
from ..sim.types import Observation, ResourceKind, SUPPLY_DISTRICT, Topology
from .cognitive import CognitiveConfig
from .memory import PrivateMemory, ROLE_DISPLAY, SharedMemory

TEMPLATE_DIR = Path(__file__).parent / "templates"

SECTION_HEADERS = ("INTERNAL_BELIEFS", "BELIEFS_ON_OTHERS", "RESPONSE", "ACTION")

_SECTION_HINTS = {
    "INTERNAL_BELIEFS": "<your belief statements, one per line, in the belief language>",
    "BELIEFS_ON_OTHERS": "<what you expect each teammate to do next, and why>",
    "RESPONSE": "<a short message to the team: where you are, what you see, what you plan, what you need>",
    "ACTION": "<exactly one of MOVE(d2) or SUPPLY_RESOURCE(15)>",
}


@lru_cache(maxsize=None)
def load_template(name: str) -> str:
    return (TEMPLATE_DIR / name).read_text(encoding="utf-8")


def required_sections(config: CognitiveConfig) -> tuple[str, ...]:
    sections = []
    if config.ib_enabled:
        sections.append("INTERNAL_BELIEFS")
    if config.tom_enabled:
        sections.append("BELIEFS_ON_OTHERS")
    sections += ["RESPONSE", "ACTION"]
    return tuple(sections)


def _section_instructions(config: CognitiveConfig) -> str:
    blocks = [f"{name}:\n{_SECTION_HINTS[name]}" for name in required_sections(config)]
    return "\n\n".join(blocks)


def _edge_list(topology: Topology) -> str:
    return ", ".join(f"{a}-{b}" for a, b in topology.edges)


def system_prompt(
    role: ResourceKind,
    config: CognitiveConfig,
    topology: Topology,
    capacity: int,
    consumption_rate: int,
    rounds: int,
) -> str:
    others = ", ".join(ROLE_DISPLAY[r] for r in ResourceKind if r is not role)
    tom_text = load_template("tom.txt") if config.tom_enabled else ""
    if config.ib_enabled:
        ib_text = load_template("ib.txt").format(
            belief_grammar=load_template("belief_grammar.ebnf").rstrip(),
            district_list=", ".join(topology.districts),
        )
    else:
        ib_text = ""
    return load_template("system.txt").format(
        role_name=ROLE_DISPLAY[role],
        resource_kind=role.value,
        other_roles=others,
        district_list=", ".join(topology.districts),
        supply_district=SUPPLY_DISTRICT,
        edge_list=_edge_list(topology),
        capacity=capacity,
        consumption_rate=consumption_rate,
        rounds=rounds,
        tom_instructions=tom_text,
        ib_instructions=ib_text,
        section_instructions=_section_instructions(config),
    )


def state_summary(obs: Observation, rounds: int) -> str:
    health_lines = ", ".join(f"{d}={h}" for d, h in sorted(obs.district_health.items()))
    if obs.at_depot:
        resource_lines = "unlimited (this is the supply depot)"
    else:
        resource_lines = ", ".join(
            f"{k.value}={obs.local_resources[k]}" for k in ResourceKind
        )
    return load_template("state.txt").format(
        round_display=obs.round + 1,
        rounds=rounds,
        role_name=ROLE_DISPLAY[obs.role],
        location=obs.location,
        inventory=obs.inventory,
        capacity=obs.capacity,
        resource_kind=obs.role.value,
        health_lines=health_lines,
        resource_lines=resource_lines,
    ).rstrip("\n")


def assemble_prompt(
    role: ResourceKind,
    config: CognitiveConfig,
    obs: Observation,
    shared: SharedMemory,
    private: PrivateMemory,
    topology: Topology,
    consumption_rate: int,
    rounds: int,
) -> list[ChatMessage]:
    """System prompt, game-state summary, recent team messages, own last notes."""
    messages = [
        ChatMessage(
            "system",
            system_prompt(role, config, topology, obs.capacity, consumption_rate, rounds),
        ),
        ChatMessage("user", state_summary(obs, rounds)),
    ]
    window = shared.window_text(obs.round)
    if window:
        messages.append(ChatMessage("user", f"Team messages (this round and last):\n{window}"))
    recap = private.latest_text(role)
    if recap:
        messages.append(ChatMessage("user", recap))
    return messages
