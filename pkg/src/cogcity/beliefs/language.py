"""AST for the constrained belief language agents use in INTERNAL_BELIEFS.

A program is a sequence of facts and rules over predicates with three
term shapes: integers, lowercase constants, and uppercase variables.
There is no negation, arithmetic, or aggregation, so evaluation is a
plain monotone fixpoint.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..sim.types import DEFAULT_DISTRICTS, ResourceKind, SUPPLY_DISTRICT


@dataclass(frozen=True)
class Integer:
    value: int

    def render(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Constant:
    name: str

    def render(self) -> str:
        return self.name


@dataclass(frozen=True)
class Variable:
    name: str

    def render(self) -> str:
        return self.name


Term = Integer | Constant | Variable


@dataclass(frozen=True)
class Atom:
    predicate: str
    args: tuple[Term, ...] = ()

    def render(self, arg_sep: str = ", ") -> str:
        if not self.args:
            return self.predicate
        return f"{self.predicate}({arg_sep.join(t.render() for t in self.args)})"

    def variables(self) -> set[str]:
        return {t.name for t in self.args if isinstance(t, Variable)}

    def is_ground(self) -> bool:
        return not any(isinstance(t, Variable) for t in self.args)


@dataclass(frozen=True)
class Fact:
    head: Atom

    def render(self) -> str:
        return f"{self.head.render()}."


@dataclass(frozen=True)
class Rule:
    head: Atom
    body: tuple[Atom, ...]

    def render(self) -> str:
        body = ", ".join(a.render() for a in self.body)
        return f"{self.head.render()} :- {body}."


Statement = Fact | Rule


@dataclass(frozen=True)
class SourceSpan:
    line: int
    column: int
    end_line: int
    end_column: int
    text: str


@dataclass(frozen=True)
class BeliefProgram:
    statements: tuple[Statement, ...]
    source_spans: tuple[SourceSpan, ...] = ()

    def __len__(self) -> int:
        return len(self.statements)

    def statement_text(self, index: int) -> str:
        """Original source of a statement, falling back to canonical form."""
        if index < len(self.source_spans):
            return self.source_spans[index].text
        return self.statements[index].render()


def pretty_print(program: BeliefProgram) -> str:
    """Canonical one-statement-per-line rendering; parses back to the same AST."""
    return "\n".join(stmt.render() for stmt in program.statements)


# Argument sorts for the built-in vocabulary.
DISTRICT = "district"
RESOURCE = "resource"
INTEGER = "integer"
AGENT = "agent"

BUILTIN_PREDICATES: dict[str, tuple[str, ...]] = {
    "at": (AGENT, DISTRICT),
    "carrying": (RESOURCE, INTEGER),
    "resource_level": (DISTRICT, RESOURCE, INTEGER),
    "health": (DISTRICT, INTEGER),
    "needs": (DISTRICT, RESOURCE, INTEGER),
    "adjacent": (DISTRICT, DISTRICT),
    "plan_move": (DISTRICT,),
    "plan_supply": (INTEGER,),
}


@dataclass(frozen=True)
class Signature:
    """Predicate arities/sorts plus the closed constant vocabularies."""

    predicates: dict[str, tuple[str, ...]] = field(
        default_factory=lambda: dict(BUILTIN_PREDICATES)
    )
    districts: frozenset[str] = frozenset(DEFAULT_DISTRICTS)
    resources: frozenset[str] = frozenset(k.value for k in ResourceKind)

    def is_builtin(self, predicate: str) -> bool:
        return predicate in self.predicates

    def constant_allowed(self, sort: str, name: str) -> bool:
        if sort == DISTRICT:
            return name in self.districts
        if sort == RESOURCE:
            return name in self.resources
        if sort == AGENT:
            return True
        return False  # integer sort never takes a constant


def default_signature(districts: tuple[str, ...] = DEFAULT_DISTRICTS) -> Signature:
    return Signature(districts=frozenset(districts))


SUPPLY_DISTRICT_CONSTANT = SUPPLY_DISTRICT
