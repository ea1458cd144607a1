from .engine import (
    apply_action,
    consume,
    end_of_round,
    final_score,
    health_decrease,
    initial_world,
    observation_for,
    resupply,
    validate_action,
)
from .types import (
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
    SUPPLY_DISTRICT,
    Topology,
    UNLIMITED_STOCK,
    WorldState,
    action_from_json,
    action_to_json,
)
from .config import load_config_file, load_sim_config, sim_params_from_config, topology_from_config

__all__ = [
    "Action",
    "AgentState",
    "DistrictState",
    "Invalid",
    "InvalidReason",
    "Move",
    "Observation",
    "ResourceKind",
    "ROLE_ORDER",
    "SimParams",
    "Supply",
    "SUPPLY_DISTRICT",
    "Topology",
    "UNLIMITED_STOCK",
    "WorldState",
    "action_from_json",
    "action_to_json",
    "apply_action",
    "consume",
    "end_of_round",
    "final_score",
    "health_decrease",
    "initial_world",
    "load_config_file",
    "load_sim_config",
    "observation_for",
    "resupply",
    "sim_params_from_config",
    "topology_from_config",
    "validate_action",
]
