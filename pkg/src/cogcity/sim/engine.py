"""Deterministic dynamics of the city world.

Every operation is a pure function from a :class:`WorldState` to a new
one. Integer arithmetic only, so identical inputs give bit-identical
trajectories.
"""
from __future__ import annotations

from dataclasses import replace

from .types import (
    SUPPLY_DISTRICT,
    UNLIMITED_STOCK,
    Action,
    AgentState,
    DistrictState,
    Invalid,
    InvalidReason,
    Move,
    Observation,
    ResourceKind,
    ROLE_ORDER,
    SimParams,
    Supply,
    Topology,
    WorldState,
)


def initial_world(params: SimParams | None = None, topology: Topology | None = None) -> WorldState:
    """Fresh world: full health, depot stocked, every agent at the depot at capacity."""
    params = params or SimParams()
    topology = topology or Topology()
    districts: dict[str, DistrictState] = {}
    for d in topology.districts:
        if d == SUPPLY_DISTRICT:
            level = params.supply_district_resource_level
        else:
            level = params.initial_resource_level
        districts[d] = DistrictState(
            health=params.initial_health,
            resources={k: level for k in ResourceKind},
        )
    agents = {
        role: AgentState(role=role, location=SUPPLY_DISTRICT, inventory=params.capacity)
        for role in ROLE_ORDER
    }
    return WorldState(round=0, districts=districts, agents=agents, params=params, topology=topology)


def health_decrease(level: int) -> int:
    """Per-resource health penalty for one round at the given stock level."""
    if level < 0:
        raise ValueError("resource level must be non-negative")
    if level < 10:
        return 10
    if level < 20:
        return 5
    return 0


def consume(level: int, rate: int) -> int:
    """One round of consumption, floored at an empty stock."""
    if level < 0 or rate < 0:
        raise ValueError("level and rate must be non-negative")
    return max(0, level - rate)


def validate_action(state: WorldState, role: ResourceKind, action: Action) -> Invalid | None:
    """Check an action against the rules; returns None when legal."""
    agent = state.agent(role)
    if isinstance(action, Move):
        if action.target not in state.topology.districts:
            return Invalid(
                InvalidReason.UNKNOWN_DISTRICT,
                f"{action.target} is not a district; districts are {', '.join(state.topology.districts)}.",
            )
        if not state.topology.adjacent(agent.location, action.target):
            neighbors = ", ".join(state.topology.neighbors(agent.location))
            return Invalid(
                InvalidReason.NOT_ADJACENT,
                f"{action.target} is not adjacent to {agent.location}; you can move to: {neighbors}.",
            )
        return None
    if isinstance(action, Supply):
        if action.amount <= 0:
            return Invalid(
                InvalidReason.NON_POSITIVE_AMOUNT,
                f"supply amount must be positive, got {action.amount}.",
            )
        if agent.location == SUPPLY_DISTRICT:
            return Invalid(
                InvalidReason.SUPPLY_AT_DEPOT,
                f"{SUPPLY_DISTRICT} is the supply depot and does not accept deliveries.",
            )
        if action.amount > agent.inventory:
            return Invalid(
                InvalidReason.INSUFFICIENT_INVENTORY,
                f"you carry {agent.inventory} units but tried to supply {action.amount}.",
            )
        return None
    raise TypeError(f"unknown action {action!r}")


def apply_action(state: WorldState, role: ResourceKind, action: Action) -> WorldState:
    """Apply a validated action. Caller must have run validate_action first."""
    problem = validate_action(state, role, action)
    if problem is not None:
        raise ValueError(f"apply_action on invalid action: {problem.reason.value}: {problem.message}")
    agent = state.agent(role)
    if isinstance(action, Move):
        return state.with_agent(role, replace(agent, location=action.target))
    district = state.district(agent.location)
    resources = dict(district.resources)
    resources[role] += action.amount
    new_state = state.with_district(agent.location, replace(district, resources=resources))
    return new_state.with_agent(role, replace(agent, inventory=agent.inventory - action.amount))


def resupply(state: WorldState, role: ResourceKind) -> WorldState:
    """Refill the agent to capacity when it is at the depot; identity elsewhere."""
    agent = state.agent(role)
    if agent.location != SUPPLY_DISTRICT:
        return state
    if agent.inventory == state.params.capacity:
        return state
    return state.with_agent(role, replace(agent, inventory=state.params.capacity))


def end_of_round(state: WorldState) -> WorldState:
    """Close out a round: apply health penalties, then consumption, then advance.

    Penalties for the three kinds are summed per district and computed from
    the levels as they stand after agent actions but before consumption.
    The depot is exempt from both penalties and consumption.
    """
    districts = dict(state.districts)
    for d in state.non_supply_districts():
        district = districts[d]
        total_decrease = sum(health_decrease(district.resources[k]) for k in ResourceKind)
        new_health = max(0, district.health - total_decrease)
        new_resources = {
            k: consume(district.resources[k], state.params.consumption_rate) for k in ResourceKind
        }
        districts[d] = DistrictState(health=new_health, resources=new_resources)
    return replace(state, districts=districts, round=state.round + 1)


def final_score(state: WorldState) -> float:
    """Average health over the non-depot districts."""
    healths = [state.district(d).health for d in state.non_supply_districts()]
    return sum(healths) / len(healths)


def observation_for(state: WorldState, role: ResourceKind) -> Observation:
    agent = state.agent(role)
    local = state.district(agent.location)
    if agent.location == SUPPLY_DISTRICT:
        local_resources = {k: UNLIMITED_STOCK for k in ResourceKind}
    else:
        local_resources = dict(local.resources)
    return Observation(
        round=state.round,
        role=role,
        location=agent.location,
        inventory=agent.inventory,
        capacity=state.params.capacity,
        district_health={d: state.district(d).health for d in state.topology.districts},
        local_resources=local_resources,
    )
