"""Bottom-up evaluation of belief programs.

The language has no negation, so the answer is the least fixpoint of the
program's facts plus the background under its rules. Rules are matched
against the current fact set with a straightforward backtracking join;
programs with cyclic predicate dependencies are rejected up front.
"""
from __future__ import annotations

from ..beliefs.analysis import find_cycles
from ..beliefs.language import Atom, BeliefProgram, Fact, Integer, Rule, Term, Variable
from .theory import FixedTheory


class CycleError(Exception):
    def __init__(self, cycles: list[list[str]]):
        rendered = "; ".join(" -> ".join(c + [c[0]]) for c in cycles)
        super().__init__(f"cyclic predicate dependencies: {rendered}")
        self.cycles = cycles


Binding = dict[str, Term]


def _unify_atom(pattern: Atom, fact: Atom, binding: Binding) -> Binding | None:
    if pattern.predicate != fact.predicate or len(pattern.args) != len(fact.args):
        return None
    out = binding
    for p, f in zip(pattern.args, fact.args):
        if isinstance(p, Variable):
            bound = out.get(p.name)
            if bound is None:
                if out is binding:
                    out = dict(binding)
                out[p.name] = f
            elif bound != f:
                return None
        elif p != f:
            return None
    return out


def _substitute(atom: Atom, binding: Binding) -> Atom:
    args = tuple(binding[t.name] if isinstance(t, Variable) else t for t in atom.args)
    return Atom(atom.predicate, args)


def _match_body(body: tuple[Atom, ...], index: dict[str, list[Atom]], binding: Binding, i: int = 0):
    if i == len(body):
        yield binding
        return
    for fact in index.get(body[i].predicate, ()):
        extended = _unify_atom(body[i], fact, binding)
        if extended is not None:
            yield from _match_body(body, index, extended, i + 1)


def saturate(facts: set[Atom], rules: list[Rule]) -> tuple[set[Atom], int]:
    """Least fixpoint; returns the closed set and the number of passes."""
    index: dict[str, list[Atom]] = {}
    for fact in facts:
        index.setdefault(fact.predicate, []).append(fact)
    passes = 0
    changed = True
    while changed:
        changed = False
        passes += 1
        for rule in rules:
            for binding in _match_body(rule.body, index, {}):
                head = _substitute(rule.head, binding)
                if head not in facts:
                    facts.add(head)
                    index.setdefault(head.predicate, []).append(head)
                    changed = True
    return facts, passes


def evaluate(
    program: BeliefProgram, theory: FixedTheory, check_cycles: bool = True
) -> frozenset[Atom]:
    """Closed fact set of the program over the background theory.

    Raises CycleError for cyclically dependent rules. Callers that have
    already run the cycle gate (e.g. repeated subset checks during core
    extraction) can skip it with check_cycles=False.
    """
    if check_cycles:
        cycles = find_cycles(program)
        if cycles:
            raise CycleError(cycles)
    facts: set[Atom] = set(theory.background)
    rules: list[Rule] = []
    for stmt in program.statements:
        if isinstance(stmt, Fact):
            facts.add(stmt.head)
        else:
            rules.append(stmt)
    closed, _ = saturate(facts, rules)
    return frozenset(closed)


def integer_value(term: Term) -> int | None:
    return term.value if isinstance(term, Integer) else None
