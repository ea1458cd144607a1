"""Core domain types for the city resource-allocation world.

All state containers are immutable: engine operations return fresh
snapshots instead of mutating their inputs, which makes trials
deterministic and safe to replay or fan out across threads.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace

# The depot district. Agents refill here; its stock never depletes.
SUPPLY_DISTRICT = "d1"

# Stand-in level for the depot's bottomless stock of every resource.
UNLIMITED_STOCK = 10**9

DEFAULT_DISTRICTS = ("d1", "d2", "d3", "d4")
DEFAULT_EDGES = (("d1", "d2"), ("d1", "d3"), ("d2", "d4"), ("d3", "d4"))


class ResourceKind(enum.Enum):
    FOOD = "food"
    MEDICINE = "medicine"
    SECURITY = "security"

    @classmethod
    def from_name(cls, name: str) -> "ResourceKind":
        return cls(name.lower())


# Fixed turn order within a round.
ROLE_ORDER = (ResourceKind.FOOD, ResourceKind.MEDICINE, ResourceKind.SECURITY)


@dataclass(frozen=True)
class Topology:
    """Undirected district graph; edges stored as a symmetric neighbour map."""

    districts: tuple[str, ...] = DEFAULT_DISTRICTS
    edges: tuple[tuple[str, str], ...] = DEFAULT_EDGES

    def __post_init__(self) -> None:
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"self-loop edge {a!r}")
            if a not in self.districts or b not in self.districts:
                raise ValueError(f"edge ({a!r}, {b!r}) names an unknown district")
        if SUPPLY_DISTRICT not in self.districts:
            raise ValueError(f"topology must contain the supply district {SUPPLY_DISTRICT!r}")

    def neighbors(self, district: str) -> tuple[str, ...]:
        out = {b for a, b in self.edges if a == district}
        out |= {a for a, b in self.edges if b == district}
        return tuple(sorted(out))

    def adjacent(self, a: str, b: str) -> bool:
        return (a, b) in self.edges or (b, a) in self.edges

    def to_json(self) -> dict:
        return {"districts": list(self.districts), "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> "Topology":
        return cls(
            districts=tuple(data["districts"]),
            edges=tuple((a, b) for a, b in data["edges"]),
        )


@dataclass(frozen=True)
class SimParams:
    consumption_rate: int = 10
    capacity: int = 50
    initial_health: int = 100
    initial_resource_level: int = 30
    rounds: int = 7
    supply_district_resource_level: int = UNLIMITED_STOCK

    def __post_init__(self) -> None:
        if self.consumption_rate <= 0:
            raise ValueError("consumption_rate must be positive")
        if self.capacity <= 0:
            raise ValueError("capacity must be positive")
        if self.rounds < 1:
            raise ValueError("rounds must be at least 1")

    def to_json(self) -> dict:
        return {
            "consumption_rate": self.consumption_rate,
            "capacity": self.capacity,
            "initial_health": self.initial_health,
            "initial_resource_level": self.initial_resource_level,
            "rounds": self.rounds,
            "supply_district_resource_level": self.supply_district_resource_level,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SimParams":
        return cls(**data)


@dataclass(frozen=True)
class DistrictState:
    health: int
    resources: dict[ResourceKind, int]

    def level(self, kind: ResourceKind) -> int:
        return self.resources[kind]

    def to_json(self) -> dict:
        return {
            "health": self.health,
            "resources": {k.value: self.resources[k] for k in ResourceKind},
        }

    @classmethod
    def from_json(cls, data: dict) -> "DistrictState":
        return cls(
            health=data["health"],
            resources={ResourceKind(k): v for k, v in data["resources"].items()},
        )


@dataclass(frozen=True)
class AgentState:
    role: ResourceKind
    location: str
    inventory: int

    def to_json(self) -> dict:
        return {"role": self.role.value, "location": self.location, "inventory": self.inventory}

    @classmethod
    def from_json(cls, data: dict) -> "AgentState":
        return cls(role=ResourceKind(data["role"]), location=data["location"], inventory=data["inventory"])


@dataclass(frozen=True)
class Move:
    target: str


@dataclass(frozen=True)
class Supply:
    amount: int


Action = Move | Supply


def action_to_json(action: Action | None) -> dict | None:
    if action is None:
        return None
    if isinstance(action, Move):
        return {"kind": "move", "target": action.target}
    return {"kind": "supply", "amount": action.amount}


def action_from_json(data: dict | None) -> Action | None:
    if data is None:
        return None
    if data["kind"] == "move":
        return Move(data["target"])
    if data["kind"] == "supply":
        return Supply(data["amount"])
    raise ValueError(f"unknown action kind {data['kind']!r}")


class InvalidReason(enum.Enum):
    NOT_ADJACENT = "NotAdjacent"
    INSUFFICIENT_INVENTORY = "InsufficientInventory"
    NON_POSITIVE_AMOUNT = "NonPositiveAmount"
    SUPPLY_AT_DEPOT = "SupplyAtDepot"
    UNKNOWN_DISTRICT = "UnknownDistrict"


@dataclass(frozen=True)
class Invalid:
    reason: InvalidReason
    message: str


@dataclass(frozen=True)
class WorldState:
    round: int
    districts: dict[str, DistrictState]
    agents: dict[ResourceKind, AgentState]
    params: SimParams
    topology: Topology

    def district(self, district_id: str) -> DistrictState:
        return self.districts[district_id]

    def agent(self, role: ResourceKind) -> AgentState:
        return self.agents[role]

    def with_district(self, district_id: str, state: DistrictState) -> "WorldState":
        districts = dict(self.districts)
        districts[district_id] = state
        return replace(self, districts=districts)

    def with_agent(self, role: ResourceKind, state: AgentState) -> "WorldState":
        agents = dict(self.agents)
        agents[role] = state
        return replace(self, agents=agents)

    def non_supply_districts(self) -> tuple[str, ...]:
        return tuple(d for d in self.topology.districts if d != SUPPLY_DISTRICT)

    def to_json(self) -> dict:
        return {
            "round": self.round,
            "districts": {d: self.districts[d].to_json() for d in self.topology.districts},
            "agents": {role.value: self.agents[role].to_json() for role in ROLE_ORDER},
            "params": self.params.to_json(),
            "topology": self.topology.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "WorldState":
        topology = Topology.from_json(data["topology"])
        return cls(
            round=data["round"],
            districts={d: DistrictState.from_json(s) for d, s in data["districts"].items()},
            agents={ResourceKind(r): AgentState.from_json(s) for r, s in data["agents"].items()},
            params=SimParams.from_json(data["params"]),
            topology=topology,
        )


@dataclass(frozen=True)
class Observation:
    """What a single agent gets to see at the start of its turn.

    Health is public for every district; resource levels are visible only
    for the district the agent is standing in.
    """

    round: int
    role: ResourceKind
    location: str
    inventory: int
    capacity: int
    district_health: dict[str, int]
    local_resources: dict[ResourceKind, int]

    @property
    def at_depot(self) -> bool:
        return self.location == SUPPLY_DISTRICT

    def to_json(self) -> dict:
        return {
            "round": self.round,
            "role": self.role.value,
            "location": self.location,
            "inventory": self.inventory,
            "capacity": self.capacity,
            "district_health": dict(sorted(self.district_health.items())),
            "local_resources": {k.value: self.local_resources[k] for k in ResourceKind},
        }
