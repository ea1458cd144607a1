"""Domain constraints over a closed belief fact set.

Checked in a fixed order, C1 through C8. Every check is monotone in the
fact set (adding atoms can only add violations), which the conflict
extraction in core.py relies on.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from ..beliefs.language import Atom, Constant
from .evaluator import integer_value
from .theory import FixedTheory

SELF = Constant("self")


class ConstraintId(enum.Enum):
    C1_UNIQUE_LOCATION = "C1"
    C2_FUNCTIONAL_VALUE = "C2"
    C3_CARRY_RANGE = "C3"
    C4_LEVEL_NON_NEGATIVE = "C4"
    C5_HEALTH_RANGE = "C5"
    C6_MOVE_ADJACENT = "C6"
    C7_SUPPLY_FEASIBLE = "C7"
    C8_SINGLE_PLAN = "C8"


@dataclass(frozen=True)
class Violation:
    constraint_id: ConstraintId
    offending_atoms: tuple[Atom, ...]
    message_template_id: str

    def to_json(self) -> dict:
        return {
            "constraint": self.constraint_id.value,
            "atoms": [a.render() for a in self.offending_atoms],
            "template": self.message_template_id,
        }


def _sorted_atoms(atoms) -> tuple[Atom, ...]:
    return tuple(sorted(atoms, key=lambda a: a.render()))


def check_constraints(facts: frozenset[Atom] | set[Atom], theory: FixedTheory) -> list[Violation]:
    violations: list[Violation] = []

    ats = [a for a in facts if a.predicate == "at" and len(a.args) == 2 and a.args[0] == SELF]
    carryings = [a for a in facts if a.predicate == "carrying" and len(a.args) == 2]
    levels = [a for a in facts if a.predicate == "resource_level" and len(a.args) == 3]
    healths = [a for a in facts if a.predicate == "health" and len(a.args) == 2]
    plan_moves = [a for a in facts if a.predicate == "plan_move" and len(a.args) == 1]
    plan_supplies = [a for a in facts if a.predicate == "plan_supply" and len(a.args) == 1]

    # C1: a single believed own location
    if len(ats) > 1:
        violations.append(Violation(ConstraintId.C1_UNIQUE_LOCATION, _sorted_atoms(ats), "C1"))

    # C2: functional predicates hold one value per key
    def functional(atoms: list[Atom], key_arity: int) -> None:
        groups: dict[tuple, list[Atom]] = {}
        for a in atoms:
            groups.setdefault(a.args[:key_arity], []).append(a)
        for key in sorted(groups, key=lambda k: tuple(t.render() for t in k)):
            group = groups[key]
            if len(group) > 1:
                violations.append(
                    Violation(ConstraintId.C2_FUNCTIONAL_VALUE, _sorted_atoms(group), "C2")
                )

    functional(carryings, 1)
    functional(levels, 2)
    functional(healths, 1)

    # C3: carried amounts within [0, capacity]
    for a in _sorted_atoms(carryings):
        amount = integer_value(a.args[1])
        if amount is not None and not (0 <= amount <= theory.capacity):
            violations.append(Violation(ConstraintId.C3_CARRY_RANGE, (a,), "C3"))

    # C4: resource levels non-negative
    for a in _sorted_atoms(levels):
        amount = integer_value(a.args[2])
        if amount is not None and amount < 0:
            violations.append(Violation(ConstraintId.C4_LEVEL_NON_NEGATIVE, (a,), "C4"))

    # C5: health within [0, 100]
    for a in _sorted_atoms(healths):
        value = integer_value(a.args[1])
        if value is not None and not (0 <= value <= 100):
            violations.append(Violation(ConstraintId.C5_HEALTH_RANGE, (a,), "C5"))

    # C6: planned moves target a district adjacent to the believed location
    for plan in _sorted_atoms(plan_moves):
        target = plan.args[0]
        if not isinstance(target, Constant):
            continue
        for at in _sorted_atoms(ats):
            location = at.args[1]
            if not isinstance(location, Constant):
                continue
            if not theory.topology.adjacent(location.name, target.name):
                violations.append(
                    Violation(ConstraintId.C6_MOVE_ADJACENT, _sorted_atoms([at, plan]), "C6")
                )

    # C7: planned supply amount positive and covered by believed holdings
    for plan in _sorted_atoms(plan_supplies):
        amount = integer_value(plan.args[0])
        if amount is None:
            continue
        if amount <= 0:
            violations.append(
                Violation(ConstraintId.C7_SUPPLY_FEASIBLE, (plan,), "C7_NON_POSITIVE")
            )
            continue
        for carrying in _sorted_atoms(carryings):
            held = integer_value(carrying.args[1])
            if held is not None and amount > held:
                violations.append(
                    Violation(
                        ConstraintId.C7_SUPPLY_FEASIBLE,
                        _sorted_atoms([plan, carrying]),
                        "C7_EXCEEDS_CARRY",
                    )
                )

    # C8: at most one declared plan
    plans = plan_moves + plan_supplies
    if len(plans) > 1:
        violations.append(Violation(ConstraintId.C8_SINGLE_PLAN, _sorted_atoms(plans), "C8"))

    return violations
