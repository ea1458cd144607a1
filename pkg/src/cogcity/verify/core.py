"""Minimal inconsistent core extraction.

Divide-and-conquer conflict extraction (Junker's QuickXplain) over the
program's statement list, with the earlier statement preferred on ties.
The oracle is "does this subset of statements, over the background
theory, violate any constraint"; because the constraints are monotone in
the fact set, the returned core is inconsistent and becomes consistent
when any single statement is dropped.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..beliefs.language import BeliefProgram, Statement
from .constraints import Violation, check_constraints
from .evaluator import evaluate
from .theory import FixedTheory


@dataclass(frozen=True)
class CoreResult:
    indices: tuple[int, ...]
    statements: tuple[Statement, ...]
    statement_texts: tuple[str, ...]
    violations_witnessed: tuple[Violation, ...]
    consistency_checks: int

    def to_json(self) -> dict:
        return {
            "indices": list(self.indices),
            "statements": list(self.statement_texts),
            "violations": [v.to_json() for v in self.violations_witnessed],
            "consistency_checks": self.consistency_checks,
        }


def _subprogram(program: BeliefProgram, indices: list[int] | tuple[int, ...]) -> BeliefProgram:
    return BeliefProgram(statements=tuple(program.statements[i] for i in indices))


def minimal_core(program: BeliefProgram, theory: FixedTheory) -> CoreResult:
    """Extract a minimal inconsistent subset of the program's statements.

    Raises ValueError when the program is already consistent. The
    consistency_checks field counts oracle calls made during extraction
    (the witness recomputation at the end is not an oracle query).
    """
    calls = 0

    def consistent(indices: list[int]) -> bool:
        nonlocal calls
        calls += 1
        facts = evaluate(_subprogram(program, indices), theory, check_cycles=False)
        return not check_constraints(facts, theory)

    everything = list(range(len(program.statements)))
    if consistent(everything):
        raise ValueError("minimal_core requires an inconsistent program")

    def qx(background: list[int], delta: list[int], constraints: list[int]) -> list[int]:
        if delta and not consistent(background):
            return []
        if len(constraints) == 1:
            return list(constraints)
        half = len(constraints) // 2
        left, right = constraints[:half], constraints[half:]
        d2 = qx(background + left, left, right)
        d1 = qx(background + d2, d2, left)
        return d1 + d2

    core = tuple(sorted(qx([], [], everything)))
    witnessed = check_constraints(evaluate(_subprogram(program, core), theory, check_cycles=False), theory)
    return CoreResult(
        indices=core,
        statements=tuple(program.statements[i] for i in core),
        statement_texts=tuple(program.statement_text(i) for i in core),
        violations_witnessed=tuple(witnessed),
        consistency_checks=calls,
    )
