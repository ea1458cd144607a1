"""Shared test helpers: independent oracles and a violation-planting generator."""
from __future__ import annotations

import itertools
import random

from cogcity.beliefs.language import Atom, BeliefProgram, Fact, Rule, Variable
from cogcity.verify import FixedTheory, check_constraints, evaluate

DISTRICTS = ["d1", "d2", "d3", "d4"]
RESOURCES = ["food", "medicine", "security"]
NON_ADJACENT = [("d1", "d4"), ("d4", "d1"), ("d2", "d3"), ("d3", "d2")]
ADJACENT = [("d1", "d2"), ("d1", "d3"), ("d2", "d4"), ("d3", "d4")]


def brute_force_fixpoint(program: BeliefProgram, theory: FixedTheory) -> frozenset[Atom]:
    """Ground every rule over every term combination and iterate. Slow on purpose."""
    facts: set[Atom] = set(theory.background)
    rules: list[Rule] = []
    terms: set = set()
    for atom in theory.background:
        terms.update(atom.args)
    for stmt in program.statements:
        if isinstance(stmt, Fact):
            facts.add(stmt.head)
            terms.update(stmt.head.args)
        else:
            rules.append(stmt)
            for atom in (stmt.head, *stmt.body):
                terms.update(t for t in atom.args if not isinstance(t, Variable))
    term_pool = sorted(terms, key=repr)

    def ground(atom: Atom, sub: dict) -> Atom:
        return Atom(
            atom.predicate,
            tuple(sub[t.name] if isinstance(t, Variable) else t for t in atom.args),
        )

    changed = True
    while changed:
        changed = False
        for rule in rules:
            names = sorted({t.name for a in (rule.head, *rule.body) for t in a.args if isinstance(t, Variable)})
            for combo in itertools.product(term_pool, repeat=len(names)):
                sub = dict(zip(names, combo))
                if all(ground(b, sub) in facts for b in rule.body):
                    head = ground(rule.head, sub)
                    if head not in facts:
                        facts.add(head)
                        changed = True
    return frozenset(facts)


def is_consistent_subset(program: BeliefProgram, indices, theory: FixedTheory) -> bool:
    subset = BeliefProgram(statements=tuple(program.statements[i] for i in indices))
    return not check_constraints(evaluate(subset, theory, check_cycles=False), theory)


def enumerate_minimal_cores(program: BeliefProgram, theory: FixedTheory) -> list[tuple[int, ...]]:
    """All single-removal-minimal inconsistent subsets, by checking every subset."""
    n = len(program.statements)
    inconsistent = set()
    for r in range(n + 1):
        for combo in itertools.combinations(range(n), r):
            if not is_consistent_subset(program, combo, theory):
                inconsistent.add(combo)
    minimal = []
    for subset in sorted(inconsistent):
        if all(
            tuple(x for x in subset if x != element) not in inconsistent for element in subset
        ):
            minimal.append(subset)
    return minimal


def confirm_core(program: BeliefProgram, core_indices, theory: FixedTheory) -> bool:
    """Core is inconsistent and every single removal restores consistency."""
    if is_consistent_subset(program, core_indices, theory):
        return False
    for drop in core_indices:
        remaining = tuple(i for i in core_indices if i != drop)
        if not is_consistent_subset(program, remaining, theory):
            return False
    return True


def random_violating_program(rng: random.Random, max_statements: int = 12) -> str:
    """Belief text with at least one planted constraint violation."""
    statements: list[str] = []
    own_location = rng.choice(DISTRICTS)
    mode = rng.choice(["C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "rule_C1"])

    if mode == "C1":
        a, b = rng.sample(DISTRICTS, 2)
        statements += [f"at(self, {a}).", f"at(self, {b})."]
    elif mode == "C2":
        kind = rng.choice(RESOURCES)
        choice = rng.choice(["carrying", "health", "resource_level"])
        lo, hi = rng.sample(range(0, 41), 2)
        if choice == "carrying":
            statements += [f"carrying({kind}, {lo}).", f"carrying({kind}, {hi})."]
        elif choice == "health":
            d = rng.choice(DISTRICTS)
            statements += [f"health({d}, {lo}).", f"health({d}, {hi})."]
        else:
            d = rng.choice(DISTRICTS)
            statements += [
                f"resource_level({d}, {kind}, {lo}).",
                f"resource_level({d}, {kind}, {hi}).",
            ]
    elif mode == "C3":
        amount = rng.choice([-5, -1, 51, 99])
        statements.append(f"carrying({rng.choice(RESOURCES)}, {amount}).")
    elif mode == "C4":
        statements.append(
            f"resource_level({rng.choice(DISTRICTS)}, {rng.choice(RESOURCES)}, -{rng.randint(1, 9)})."
        )
    elif mode == "C5":
        value = rng.choice([-10, 101, 999])
        statements.append(f"health({rng.choice(DISTRICTS)}, {value}).")
    elif mode == "C6":
        src, dst = rng.choice(NON_ADJACENT)
        own_location = src
        statements += [f"at(self, {src}).", f"plan_move({dst})."]
    elif mode == "C7":
        kind = rng.choice(RESOURCES)
        if rng.random() < 0.5:
            held = rng.randint(0, 30)
            statements += [f"carrying({kind}, {held}).", f"plan_supply({held + rng.randint(1, 20)})."]
        else:
            statements.append(f"plan_supply({rng.choice([0, -3])}).")
    elif mode == "C8":
        src, dst = rng.choice(ADJACENT)
        own_location = src
        statements += [
            f"at(self, {src}).",
            f"plan_move({dst}).",
            f"plan_supply({rng.randint(1, 10)}).",
        ]
    else:  # rule_C1: the second location arrives via a rule firing
        a, b = rng.sample(DISTRICTS, 2)
        statements += [f"at(self, {a}).", f"at(self, {b}) :- district({a})."]

    has_at = any(s.startswith("at(self") for s in statements)
    fillers = [
        lambda: f"health({rng.choice(DISTRICTS)}, {rng.randint(0, 100)}).",
        lambda: f"needs({rng.choice(DISTRICTS)}, {rng.choice(RESOURCES)}, {rng.randint(1, 40)}).",
        lambda: f"note({rng.choice(DISTRICTS)}).",
        lambda: f"adjacent({ADJACENT[rng.randrange(len(ADJACENT))][0]}, {ADJACENT[rng.randrange(len(ADJACENT))][1]}).",
        lambda: "needs(D, food, 20) :- resource_level(D, food, 0).",
    ]
    if not has_at:
        statements.append(f"at(self, {own_location}).")
    target = rng.randint(len(statements), max_statements)
    while len(statements) < target:
        statements.append(rng.choice(fillers)())
    rng.shuffle(statements)
    return "\n".join(statements)
