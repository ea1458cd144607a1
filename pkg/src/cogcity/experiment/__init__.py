from .outputs import emit_outputs, render_chart_svg
from .plan import ExperimentPlan, PlanCell, derive_seed, load_plan, plan_from_dict
from .runner import TrialResult, run_cell_trial, run_plan, summarize
from .stats import BootstrapSummary, bootstrap_median

__all__ = [
    "BootstrapSummary",
    "ExperimentPlan",
    "PlanCell",
    "TrialResult",
    "bootstrap_median",
    "derive_seed",
    "emit_outputs",
    "load_plan",
    "plan_from_dict",
    "render_chart_svg",
    "run_cell_trial",
    "run_plan",
    "summarize",
]
