from .constraints import ConstraintId, Violation, check_constraints
from .core import CoreResult, minimal_core
from .evaluator import CycleError, evaluate
from .explain import explain
from .report import ReportStatus, VerificationReport, verify
from .theory import FixedTheory, background_atoms

__all__ = [
    "ConstraintId",
    "CoreResult",
    "CycleError",
    "FixedTheory",
    "ReportStatus",
    "VerificationReport",
    "Violation",
    "background_atoms",
    "check_constraints",
    "evaluate",
    "explain",
    "minimal_core",
    "verify",
]
