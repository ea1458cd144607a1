"""The full verification pipeline: parse, vet, evaluate, check, explain."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from ..beliefs.analysis import check_safety, find_cycles
from ..beliefs.language import Fact
from ..beliefs.parser import ArityError, BeliefLanguageError, ParseError, SortError, parse
from .constraints import Violation, check_constraints
from .core import CoreResult, minimal_core
from .evaluator import evaluate
from .explain import explain
from .theory import FixedTheory


class ReportStatus(enum.Enum):
    CONSISTENT = "consistent"
    INCONSISTENT = "inconsistent"
    MALFORMED = "malformed"


@dataclass(frozen=True)
class VerificationReport:
    status: ReportStatus
    derived_fact_count: int = 0
    violations: tuple[Violation, ...] = ()
    core: CoreResult | None = None
    explanation: str = ""
    malformed_kind: str = ""
    diagnostics: str = ""

    @property
    def consistent(self) -> bool:
        return self.status is ReportStatus.CONSISTENT

    def feedback_text(self) -> str:
        """The message handed back to the agent on a failed check."""
        if self.status is ReportStatus.CONSISTENT:
            return ""
        if self.status is ReportStatus.MALFORMED:
            return (
                f"Your INTERNAL_BELIEFS could not be processed ({self.malformed_kind}): "
                f"{self.diagnostics} Rewrite the section in valid belief syntax."
            )
        return (
            "Your INTERNAL_BELIEFS are logically inconsistent.\n"
            f"{self.explanation}\n"
            "Reformulate your beliefs so they are consistent, and answer again in full."
        )

    def to_json(self) -> dict:
        data: dict = {"status": self.status.value}
        if self.status is ReportStatus.CONSISTENT:
            data["derived_fact_count"] = self.derived_fact_count
        elif self.status is ReportStatus.INCONSISTENT:
            data["violations"] = [v.to_json() for v in self.violations]
            data["core"] = self.core.to_json() if self.core else None
            data["explanation"] = self.explanation
        else:
            data["kind"] = self.malformed_kind
            data["diagnostics"] = self.diagnostics
        return data


def _malformed(kind: str, diagnostics: str) -> VerificationReport:
    return VerificationReport(
        status=ReportStatus.MALFORMED, malformed_kind=kind, diagnostics=diagnostics
    )


def verify(program_text: str, theory: FixedTheory | None = None) -> VerificationReport:
    """Run the whole check on belief-language source text."""
    theory = theory or FixedTheory()
    try:
        program = parse(program_text, theory.signature)
    except ArityError as err:
        return _malformed("arity", str(err))
    except SortError as err:
        return _malformed("sort", str(err))
    except ParseError as err:
        return _malformed("parse", str(err))
    except BeliefLanguageError as err:  # pragma: no cover - subclasses above
        return _malformed("parse", str(err))

    unsafe = check_safety(program)
    if unsafe:
        listed = "; ".join(
            f"statement {u.statement_index + 1} has unsafe variable {u.variable}" for u in unsafe
        )
        return _malformed("safety", f"{listed}. Every head variable must appear in the rule body.")

    cycles = find_cycles(program)
    if cycles:
        rendered = "; ".join(" -> ".join(c + [c[0]]) for c in cycles)
        return _malformed("cycle", f"rules depend on each other in a loop: {rendered}.")

    facts = evaluate(program, theory, check_cycles=False)
    violations = check_constraints(facts, theory)
    if not violations:
        stated = {stmt.head for stmt in program.statements if isinstance(stmt, Fact)}
        derived = len(facts) - len(theory.background | stated)
        return VerificationReport(status=ReportStatus.CONSISTENT, derived_fact_count=derived)

    core = minimal_core(program, theory)
    return VerificationReport(
        status=ReportStatus.INCONSISTENT,
        violations=tuple(violations),
        core=core,
        explanation=explain(core, theory),
    )
