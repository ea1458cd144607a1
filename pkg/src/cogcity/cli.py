"""Command-line interface.

Subcommands: simulate (one trial), experiment (a plan of trials), verify
(check a belief file), replay (confirm a transcript), report (regenerate
tables and the chart from stored results).

Exit codes: 0 success, 1 domain error (inconsistent beliefs, failed
replay, aborted trial), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .experiment.outputs import emit_outputs
from .experiment.plan import load_plan, plan_from_dict
from .experiment.runner import TrialResult, run_plan, summarize
from .harness.cognitive import CognitiveConfig
from .harness.transcript import load_transcript_json, replay_check
from .harness.trial import TrialAbort, run_trial
from .policies.cassette import Cassette, ReplayPolicy
from .policies.heuristic import HeuristicPolicy
from .policies.llm import EndpointConfig, LlmPolicy
from .sim.config import load_config_file, sim_params_from_config, topology_from_config
from .sim.types import ResourceKind, SimParams, Topology
from .verify.report import ReportStatus, verify
from .verify.theory import FixedTheory


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cogcity", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run one trial and write its transcript")
    sim.add_argument("--config", help="TOML/JSON config file with [sim]/[topology]/[llm] tables")
    sim.add_argument("--policy", choices=["llm", "heuristic", "replay"], default="heuristic")
    sim.add_argument("--cassette", help="cassette file for --policy replay")
    sim.add_argument("--tom", action="store_true", help="enable beliefs-on-others reasoning")
    sim.add_argument("--ib", action="store_true", help="enable verified internal beliefs")
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--out", default="transcript.json", help="transcript output path")

    exp = sub.add_parser("experiment", help="run a plan of trials and emit reports")
    exp.add_argument("--plan", required=True, help="plan file (TOML or JSON)")
    exp.add_argument("--out", required=True, help="output directory")
    exp.add_argument("--workers", type=int, default=None, help="parallel trials")

    ver = sub.add_parser("verify", help="check a belief file (or stdin with -)")
    ver.add_argument("file", help="path to a .bel file, or - for stdin")
    ver.add_argument("--json", action="store_true", help="print the report as JSON")

    rep = sub.add_parser("replay", help="recompute a transcript and confirm every snapshot")
    rep.add_argument("transcript", help="transcript JSON file")

    rpt = sub.add_parser("report", help="regenerate CSV/SVG outputs from stored results")
    rpt.add_argument("--results", required=True, help="experiment output directory")

    return parser


def _load_sim_settings(config_path: str | None) -> tuple[SimParams, Topology, dict]:
    if not config_path:
        return SimParams(), Topology(), {}
    data = load_config_file(config_path)
    return sim_params_from_config(data), topology_from_config(data), data


def cmd_simulate(args: argparse.Namespace) -> int:
    params, topology, raw = _load_sim_settings(args.config)
    config = CognitiveConfig(tom_enabled=args.tom, ib_enabled=args.ib)
    if args.policy == "heuristic":
        policy = HeuristicPolicy(topology)
        label = "heuristic"
    elif args.policy == "replay":
        if not args.cassette:
            print("error: --policy replay needs --cassette", file=sys.stderr)
            return 2
        policy = ReplayPolicy(Cassette.load(args.cassette))
        label = "replay"
    else:
        if "llm" not in raw:
            print("error: --policy llm needs an [llm] table in --config", file=sys.stderr)
            return 2
        endpoint = EndpointConfig(**raw["llm"])
        policy = LlmPolicy(endpoint)
        label = f"llm:{endpoint.model_name}"
    policies = {role: policy for role in ResourceKind}
    try:
        transcript = run_trial(params, topology, config, policies, args.seed, policy_label=label)
    except TrialAbort as abort:
        abort.partial.save(args.out)
        print(f"trial aborted: {abort}", file=sys.stderr)
        print(f"partial transcript written to {args.out}", file=sys.stderr)
        return 1
    transcript.save(args.out)
    print(
        f"trial complete: {len(transcript.turn_records)} turns, "
        f"final score {transcript.final_score:.2f}, transcript at {args.out}"
    )
    return 0


def cmd_experiment(args: argparse.Namespace) -> int:
    plan = load_plan(args.plan)
    results, summaries = run_plan(plan, args.out, workers=args.workers)
    emit_outputs(results, summaries, args.out)
    failed = [r for r in results if not r.ok]
    for summary in summaries:
        print(
            f"{summary.cell_id}: median {summary.median:.2f} "
            f"[{summary.ci_low:.2f}, {summary.ci_high:.2f}] over {summary.n} trials"
        )
    if failed:
        print(f"{len(failed)} trial(s) failed and were excluded:", file=sys.stderr)
        for r in failed:
            print(f"  {r.cell_id} trial {r.trial}: {r.error}", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        text = Path(args.file).read_text(encoding="utf-8")
    report = verify(text, FixedTheory())
    if args.json:
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    elif report.status is ReportStatus.CONSISTENT:
        print(f"CONSISTENT ({report.derived_fact_count} derived facts)")
    elif report.status is ReportStatus.MALFORMED:
        print(f"MALFORMED ({report.malformed_kind}): {report.diagnostics}")
    else:
        print("INCONSISTENT")
        print(report.explanation)
    return 0 if report.status is ReportStatus.CONSISTENT else 1


def cmd_replay(args: argparse.Namespace) -> int:
    transcript = load_transcript_json(args.transcript)
    problems = replay_check(transcript)
    if problems:
        for problem in problems:
            print(f"mismatch: {problem}", file=sys.stderr)
        return 1
    rounds = len(transcript["rounds"])
    print(f"replay ok: {rounds} round(s) reproduced exactly")
    return 0


def cmd_report(args: argparse.Namespace) -> int:
    results_dir = Path(args.results)
    stored = json.loads((results_dir / "results.json").read_text(encoding="utf-8"))
    plan = plan_from_dict(stored["plan"])
    results = [TrialResult.from_json(r) for r in stored["results"]]
    summaries = summarize(plan, results)
    paths = emit_outputs(results, summaries, results_dir)
    print("regenerated: " + ", ".join(str(p) for p in paths.values()))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "simulate": cmd_simulate,
        "experiment": cmd_experiment,
        "verify": cmd_verify,
        "replay": cmd_replay,
        "report": cmd_report,
    }
    try:
        return handlers[args.command](args)
    except (FileNotFoundError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
