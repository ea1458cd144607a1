"""Deterministic natural-language rendering of an inconsistent core.

One sentence per witnessed violation from a fixed template table, then
the core statements quoted verbatim. Same core in, same text out.
"""
from __future__ import annotations

from ..beliefs.language import Constant
from .constraints import ConstraintId, Violation
from .core import CoreResult
from .theory import FixedTheory

_NUMBER_WORDS = {2: "two", 3: "three", 4: "four", 5: "five"}


def _atoms(violation: Violation) -> str:
    return ", ".join(a.render(arg_sep=",") for a in violation.offending_atoms)


def _count_word(n: int) -> str:
    return _NUMBER_WORDS.get(n, str(n))


def _sentence(violation: Violation, theory: FixedTheory) -> str:
    cid = violation.constraint_id
    atoms = _atoms(violation)
    if cid is ConstraintId.C1_UNIQUE_LOCATION:
        count = _count_word(len(violation.offending_atoms))
        return (
            f"You believe you are in {count} districts at once: {atoms}. "
            "Revise your location belief."
        )
    if cid is ConstraintId.C2_FUNCTIONAL_VALUE:
        return (
            f"You hold more than one value for the same quantity: {atoms}. "
            "Keep exactly one."
        )
    if cid is ConstraintId.C3_CARRY_RANGE:
        return (
            f"A carried amount is outside the feasible range 0..{theory.capacity}: {atoms}. "
            "Inventory must fit your capacity."
        )
    if cid is ConstraintId.C4_LEVEL_NON_NEGATIVE:
        return f"A resource level is negative: {atoms}. Stocks cannot go below zero."
    if cid is ConstraintId.C5_HEALTH_RANGE:
        return f"A health value is outside 0..100: {atoms}. District health is bounded."
    if cid is ConstraintId.C6_MOVE_ADJACENT:
        location = target = "?"
        for atom in violation.offending_atoms:
            if atom.predicate == "at" and isinstance(atom.args[1], Constant):
                location = atom.args[1].name
            if atom.predicate == "plan_move" and isinstance(atom.args[0], Constant):
                target = atom.args[0].name
        neighbors = ", ".join(theory.topology.neighbors(location)) or "none"
        return (
            f"You plan to move to {target}, but from {location} the adjacent districts are: "
            f"{neighbors}. The move contradicts the city map ({atoms})."
        )
    if cid is ConstraintId.C7_SUPPLY_FEASIBLE:
        if violation.message_template_id == "C7_NON_POSITIVE":
            return f"Your planned supply amount is not positive: {atoms}. Supply a positive amount."
        return (
            f"Your planned supply exceeds what you believe you carry: {atoms}. "
            "Plan an amount within your believed inventory."
        )
    if cid is ConstraintId.C8_SINGLE_PLAN:
        return f"You declared more than one plan: {atoms}. Commit to a single plan."
    raise AssertionError(f"no template for {cid}")


def explain(core: CoreResult, theory: FixedTheory) -> str:
    lines = [_sentence(v, theory) for v in core.violations_witnessed]
    lines.append("These statements of yours cannot hold together:")
    lines.extend(f"  {text}" for text in core.statement_texts)
    return "\n".join(lines)
