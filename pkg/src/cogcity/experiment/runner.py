"""Run every (cell, trial) of a plan and summarize per cell."""
from __future__ import annotations

import dataclasses
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from ..harness.trial import Transcript, TrialAbort, run_trial
from ..policies.base import Policy
from ..policies.cassette import Cassette, ReplayPolicy
from ..policies.heuristic import HeuristicPolicy
from ..policies.llm import LlmPolicy
from ..sim.types import ResourceKind, ROLE_ORDER
from .plan import ExperimentPlan, PlanCell
from .stats import BootstrapSummary, bootstrap_median


@dataclass(frozen=True)
class TrialResult:
    cell_id: str
    config: str
    policy: str
    trial: int
    seed: int
    final_score: float | None
    verified_turn_fraction: float | None
    invalid_action_count: int | None
    transcript_path: str
    error: str = ""

    @property
    def ok(self) -> bool:
        return not self.error

    def to_json(self) -> dict:
        return {
            "cell_id": self.cell_id,
            "config": self.config,
            "policy": self.policy,
            "trial": self.trial,
            "seed": self.seed,
            "final_score": self.final_score,
            "verified_turn_fraction": self.verified_turn_fraction,
            "invalid_action_count": self.invalid_action_count,
            "transcript_path": self.transcript_path,
            "error": self.error,
        }

    @classmethod
    def from_json(cls, data: dict) -> "TrialResult":
        return cls(**data)


def _build_policies(cell: PlanCell, trial: int, plan: ExperimentPlan) -> tuple[dict[ResourceKind, Policy], str]:
    if cell.policy == "heuristic":
        policy: Policy = HeuristicPolicy(plan.topology)
        label = "heuristic"
    elif cell.policy == "replay":
        cassette = Cassette.load(cell.cassette_path(trial))
        policy = ReplayPolicy(cassette)
        label = "replay"
    else:
        policy = LlmPolicy(cell.endpoint)
        label = f"llm:{cell.endpoint.model_name}"
    return {role: policy for role in ROLE_ORDER}, label


def _transcript_stats(transcript: Transcript) -> tuple[float, int]:
    records = transcript.turn_records
    verified = sum(1 for r in records if r.verified) / len(records) if records else 1.0
    invalid = sum(len(r.action_feedback) for r in records)
    return verified, invalid


def run_cell_trial(plan: ExperimentPlan, cell: PlanCell, trial: int, out_dir: Path) -> TrialResult:
    seed = plan.trial_seed(cell.cell_id, trial)
    transcript_path = out_dir / "transcripts" / f"{cell.cell_id}__t{trial}.json"
    try:
        policies, label = _build_policies(cell, trial, plan)
        transcript = run_trial(
            plan.params, plan.topology, cell.config, policies, seed, policy_label=label
        )
    except TrialAbort as abort:
        abort.partial.save(transcript_path)
        return TrialResult(
            cell_id=cell.cell_id,
            config=cell.config.name,
            policy=cell.policy,
            trial=trial,
            seed=seed,
            final_score=None,
            verified_turn_fraction=None,
            invalid_action_count=None,
            transcript_path=str(transcript_path),
            error=str(abort),
        )
    except FileNotFoundError as err:
        return TrialResult(
            cell_id=cell.cell_id,
            config=cell.config.name,
            policy=cell.policy,
            trial=trial,
            seed=seed,
            final_score=None,
            verified_turn_fraction=None,
            invalid_action_count=None,
            transcript_path="",
            error=f"missing cassette: {err}",
        )
    transcript.save(transcript_path)
    verified_fraction, invalid_count = _transcript_stats(transcript)
    return TrialResult(
        cell_id=cell.cell_id,
        config=cell.config.name,
        policy=cell.policy,
        trial=trial,
        seed=seed,
        final_score=transcript.final_score,
        verified_turn_fraction=verified_fraction,
        invalid_action_count=invalid_count,
        transcript_path=str(transcript_path),
    )


def summarize(plan: ExperimentPlan, results: list[TrialResult]) -> list[BootstrapSummary]:
    summaries = []
    for cell in plan.cells:
        cell_results = [r for r in results if r.cell_id == cell.cell_id]
        scores = [r.final_score for r in cell_results if r.ok]
        failed = len(cell_results) - len(scores)
        if not scores:
            continue
        summary = bootstrap_median(
            scores,
            resamples=plan.resamples,
            confidence=plan.confidence,
            seed=derive_bootstrap_seed(plan, cell),
        )
        summaries.append(
            dataclasses.replace(
                summary,
                cell_id=cell.cell_id,
                config=cell.config.name,
                policy=cell.policy,
                n_failed=failed,
            )
        )
    return summaries


def derive_bootstrap_seed(plan: ExperimentPlan, cell: PlanCell) -> int:
    from .plan import derive_seed

    return derive_seed(plan.master_seed, cell.cell_id, "bootstrap")


def run_plan(
    plan: ExperimentPlan, out_dir: str | Path, workers: int | None = None
) -> tuple[list[TrialResult], list[BootstrapSummary]]:
    """All cells x trials, then one bootstrap summary per cell.

    Trials may run on a thread pool; results come back in plan order
    regardless, so outputs are deterministic for deterministic policies.
    """
    out_dir = Path(out_dir)
    (out_dir / "transcripts").mkdir(parents=True, exist_ok=True)
    jobs = [(cell, trial) for cell in plan.cells for trial in range(plan.trials_per_cell)]
    max_workers = workers or plan.workers or 1
    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            results = list(pool.map(lambda j: run_cell_trial(plan, j[0], j[1], out_dir), jobs))
    else:
        results = [run_cell_trial(plan, cell, trial, out_dir) for cell, trial in jobs]
    summaries = summarize(plan, results)
    with open(out_dir / "results.json", "w", encoding="utf-8") as fh:
        json.dump(
            {"plan": plan.to_json(), "results": [r.to_json() for r in results]},
            fh,
            indent=2,
            sort_keys=True,
        )
        fh.write("\n")
    return results, summaries
