"""Acceptance suite: one test per release criterion, one PASS line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""
from __future__ import annotations

import json
import math
import random
import time
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from cogcity.beliefs import parse
from cogcity.experiment import (
    ExperimentPlan,
    PlanCell,
    bootstrap_median,
    emit_outputs,
    render_chart_svg,
    run_plan,
)
from cogcity.harness import CognitiveConfig, parse_response, replay_check, run_trial
from cogcity.harness.cognitive import ALL_CONFIGS
from cogcity.policies import HeuristicPolicy
from cogcity.sim import ROLE_ORDER, SimParams, Topology, health_decrease
from cogcity.verify import FixedTheory, minimal_core

from support import confirm_core, is_consistent_subset, random_violating_program

FIXTURE_CASSETTES = Path(__file__).parent / "fixtures" / "cassettes"
TOM_IB = CognitiveConfig(True, True)
BASE = CognitiveConfig(False, False)

# First verified heuristic ToM+IB run under default parameters; pinned as
# the golden behavior anchor (criterion 6). Must never drift.
GOLDEN_HEURISTIC_SCORE = 13.333333333333334


def announce(number: int, text: str) -> None:
    print(f"[criterion {number}] PASS - {text}")


def heuristic_policies(topology: Topology):
    policy = HeuristicPolicy(topology)
    return {role: policy for role in ROLE_ORDER}


def test_criterion_1_dynamics_exactness():
    start = time.time()

    def oracle(level: int) -> int:
        if level < 10:
            return 10
        if level < 20:
            return 5
        return 0

    for level in range(0, 101):
        assert health_decrease(level) == oracle(level)
    assert health_decrease(9) == 10
    assert health_decrease(10) == 5
    assert health_decrease(19) == 5
    assert health_decrease(20) == 0
    elapsed = time.time() - start
    assert elapsed < 1.0
    announce(1, f"health decrease matches the 3-branch table on 0..100 ({elapsed:.3f}s)")


def test_criterion_2_noop_trajectory_oracle():
    start = time.time()
    params = SimParams()

    # independent hand simulation: one district, three identical kinds
    def hand_simulated_final_health() -> int:
        health, levels = params.initial_health, [params.initial_resource_level] * 3
        for _ in range(params.rounds):
            drop = sum(10 if lv < 10 else 5 if lv < 20 else 0 for lv in levels)
            health = max(0, health - drop)
            levels = [max(0, lv - params.consumption_rate) for lv in levels]
        return health

    class NoopPolicy:
        # an always-illegal action exhausts the retries: every turn is a no-op
        def respond(self, messages, ctx):
            return "RESPONSE:\nwaiting\n\nACTION:\nSUPPLY_RESOURCE(0)"

    transcript = run_trial(
        params, Topology(), BASE, {r: NoopPolicy() for r in ROLE_ORDER}, seed=0
    )
    assert hand_simulated_final_health() == 0
    assert transcript.final_score == 0
    assert all(not r.committed for r in transcript.turn_records)
    elapsed = time.time() - start
    assert elapsed < 1.0
    announce(2, f"no-op trajectory ends at score 0, matching the hand oracle ({elapsed:.3f}s)")


def test_criterion_3_mus_oracle_equivalence():
    start = time.time()
    theory = FixedTheory()
    rng = random.Random(42)
    confirmed = 0
    while confirmed < 500:
        text = random_violating_program(rng, max_statements=12)
        program = parse(text)
        everything = range(len(program.statements))
        if is_consistent_subset(program, everything, theory):
            continue
        result = minimal_core(program, theory)
        assert confirm_core(program, result.indices, theory), text
        n, k = len(program.statements), len(result.indices)
        assert result.consistency_checks <= 2 * k * (math.log2(n) + 2), text
        confirmed += 1
    elapsed = time.time() - start
    assert elapsed < 30.0
    announce(
        3,
        f"{confirmed} random cores confirmed minimal within the call-count bound ({elapsed:.2f}s)",
    )


def test_criterion_4_repair_loop_conformance():
    start = time.time()

    @dataclass
    class Scripted:
        responses: list
        calls: int = 0

        def respond(self, messages, ctx):
            out = self.responses[min(self.calls, len(self.responses) - 1)]
            self.calls += 1
            return out

    def ib_reply(beliefs: str) -> str:
        return f"INTERNAL_BELIEFS:\n{beliefs}\n\nRESPONSE:\nok\n\nACTION:\nMOVE(d2)"

    bad = ib_reply("at(self, d1).\nat(self, d2).")
    good = ib_reply("at(self, d1).\nplan_move(d2).")
    params, topology = SimParams(), Topology()
    config = CognitiveConfig(False, True)

    transcript = run_trial(
        params, topology, config, {r: Scripted([bad, bad, good]) for r in ROLE_ORDER}, seed=0
    )
    first = transcript.turn_records[0]
    assert len(first.verification_reports) == 3
    assert [r.status.value for r in first.verification_reports] == [
        "inconsistent",
        "inconsistent",
        "consistent",
    ]
    assert first.verified is True

    stubborn = {r: Scripted([bad, bad, bad, bad]) for r in ROLE_ORDER}
    transcript = run_trial(params, topology, config, stubborn, seed=0)
    first = transcript.turn_records[0]
    assert len(first.verification_reports) == 3  # the fourth attempt is never requested
    assert first.verified is False
    assert len(first.raw_outputs) == 3
    elapsed = time.time() - start
    assert elapsed < 1.0
    announce(4, f"repair loop stops at three attempts and flags the outcome ({elapsed:.3f}s)")


def test_criterion_5_trial_shape_and_replay():
    start = time.time()
    params, topology = SimParams(), Topology()
    for config in ALL_CONFIGS:
        transcript = run_trial(params, topology, config, heuristic_policies(topology), seed=11)
        assert len(transcript.turn_records) == 21
        data = json.loads(json.dumps(transcript.to_json()))
        assert replay_check(data) == []
    elapsed = time.time() - start
    assert elapsed < 5.0
    announce(5, f"all four configs: 21 turn records, replay reproduces every snapshot ({elapsed:.2f}s)")


def test_criterion_6_heuristic_golden_snapshot():
    params, topology = SimParams(), Topology()
    transcript = run_trial(params, topology, TOM_IB, heuristic_policies(topology), seed=0)
    statuses = [
        rep.status.value for rec in transcript.turn_records for rep in rec.verification_reports
    ]
    assert statuses == ["consistent"] * 21
    assert sum(len(r.action_feedback) for r in transcript.turn_records) == 0
    assert all(r.committed for r in transcript.turn_records)
    assert transcript.final_score == GOLDEN_HEURISTIC_SCORE
    announce(
        6,
        f"heuristic ToM+IB: 21 verified turns, 0 invalid actions, score pinned at "
        f"{GOLDEN_HEURISTIC_SCORE}",
    )


def test_criterion_7_bootstrap_correctness():
    start = time.time()
    degenerate = bootstrap_median([70.0] * 10, resamples=1000, seed=3)
    assert (degenerate.median, degenerate.ci_low, degenerate.ci_high) == (70.0, 70.0, 70.0)

    # Monte Carlo coverage of the 95% interval for the median of N(50, 10)
    rng = np.random.default_rng(0)
    reps, hits = 200, 0
    for i in range(reps):
        samples = rng.normal(50, 10, size=10).tolist()
        s = bootstrap_median(samples, resamples=1000, confidence=0.95, seed=1234 + i)
        if s.ci_low <= 50 <= s.ci_high:
            hits += 1
    coverage = hits / reps
    assert coverage >= 0.90, coverage
    elapsed = time.time() - start
    assert elapsed < 60.0
    announce(
        7,
        f"degenerate CI collapses; coverage {coverage:.1%} over {reps} repetitions ({elapsed:.2f}s)",
    )


def test_criterion_8_cassette_experiment_substitute(tmp_path):
    # The published study's median scores (70.56 for the strongest model
    # with both mechanisms, 27.50 for the weakest without ToM, and so on)
    # came from proprietary hosted models sampled for an unreported number
    # of trials. They cannot be reproduced at desk scale; this criterion
    # instead pins the full pipeline on recorded trials.
    print(
        "\n[criterion 8] NOTE: published per-model medians (e.g. 70.56, 27.50) depend on "
        "proprietary endpoints and unreported trial counts; they are out of reach by design. "
        "The substitute is the hermetic cassette experiment below plus criteria 1-7."
    )
    cells = tuple(
        PlanCell(
            cell_id=f"replay-{config.name}",
            policy="replay",
            config=config,
            cassette_dir=str(FIXTURE_CASSETTES),
        )
        for config in ALL_CONFIGS
    )
    plan = ExperimentPlan(cells=cells, trials_per_cell=3, master_seed=2024, resamples=2000)

    outputs = {}
    for run in ("a", "b"):
        results, summaries = run_plan(plan, tmp_path / run)
        assert len(results) == 12 and all(r.ok for r in results)
        assert len(summaries) == 4
        paths = emit_outputs(results, summaries, tmp_path / run)
        outputs[run] = paths["summary_csv"].read_bytes()
        svg = paths["chart_svg"].read_text()
    assert outputs["a"] == outputs["b"], "summary.csv must be byte-stable across reruns"

    root = ET.fromstring(svg)
    rects = root.findall(".//{http://www.w3.org/2000/svg}rect")
    bars = len(rects) - 1 - 4  # minus background and the four legend swatches
    assert bars == 4
    whiskers = root.findall(".//{http://www.w3.org/2000/svg}line")
    assert len(whiskers) >= 4 * 3  # vertical bar plus two caps per cell

    # the chart's number formatting renders study-scale values exactly
    import dataclasses

    styled = [
        dataclasses.replace(summaries[0], median=70.56, ci_low=65.0, ci_high=75.0),
        dataclasses.replace(summaries[1], median=27.50, ci_low=20.0, ci_high=35.0),
    ]
    label_svg = render_chart_svg(styled)
    assert "70.56" in label_svg and "27.50" in label_svg
    announce(8, "cassette experiment: 4 configs x 3 recorded trials, byte-stable summary, 4-bar chart")


def test_criterion_9_memory_isolation():
    start = time.time()
    params, topology = SimParams(), Topology()
    transcript = run_trial(params, topology, TOM_IB, heuristic_policies(topology), seed=5)
    private_texts = {role: [] for role in ROLE_ORDER}
    for record in transcript.turn_records:
        parsed = parse_response(record.raw_outputs[-1], TOM_IB)
        for text in (parsed.internal_beliefs, parsed.beliefs_on_others):
            if text:
                private_texts[record.role].append(text)
    assert all(private_texts[role] for role in ROLE_ORDER)
    for record in transcript.turn_records:
        prompt = "\n".join(m.content for m in record.conversation if m.role != "assistant")
        for other in ROLE_ORDER:
            if other is record.role:
                continue
            for secret in private_texts[other]:
                assert secret not in prompt
    elapsed = time.time() - start
    assert elapsed < 5.0
    announce(9, f"no prompt leaks another agent's private sections ({elapsed:.2f}s)")
