"""The fixed background theory beliefs are checked against.

Holds the immutable world knowledge (district roster, adjacency both
ways, resource kinds) plus the carrying capacity used by the range
constraints. Background atoms are never part of a reported core.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..beliefs.language import Atom, Constant, Signature, default_signature
from ..sim.types import ResourceKind, Topology


def background_atoms(topology: Topology) -> frozenset[Atom]:
    atoms: set[Atom] = set()
    for d in topology.districts:
        atoms.add(Atom("district", (Constant(d),)))
    for a, b in topology.edges:
        atoms.add(Atom("adjacent", (Constant(a), Constant(b))))
        atoms.add(Atom("adjacent", (Constant(b), Constant(a))))
    for kind in ResourceKind:
        atoms.add(Atom("resource", (Constant(kind.value),)))
    return frozenset(atoms)


@dataclass(frozen=True)
class FixedTheory:
    topology: Topology = field(default_factory=Topology)
    capacity: int = 50
    signature: Signature = field(default_factory=default_signature)

    @property
    def background(self) -> frozenset[Atom]:
        return background_atoms(self.topology)

    @classmethod
    def for_world(cls, topology: Topology, capacity: int) -> "FixedTheory":
        return cls(
            topology=topology,
            capacity=capacity,
            signature=default_signature(topology.districts),
        )
