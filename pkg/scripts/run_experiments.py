#!/usr/bin/env python3
"""Run the two stock experiment plans and print the summary table.

Both are hermetic: the heuristic plan needs no network at all, and the
cassette plan replays the recorded fixtures. Outputs land in out/.
"""
from __future__ import annotations

import sys
from pathlib import Path

from cogcity.experiment import emit_outputs, load_plan, run_plan

REPO_ROOT = Path(__file__).resolve().parent.parent


def run_one(plan_name: str, out_name: str) -> None:
    plan = load_plan(REPO_ROOT / "plans" / plan_name)
    out_dir = REPO_ROOT / "out" / out_name
    results, summaries = run_plan(plan, out_dir)
    emit_outputs(results, summaries, out_dir)
    print(f"\n== {plan_name} -> {out_dir}")
    for s in summaries:
        print(
            f"  {s.cell_id:<22} n={s.n}  median={s.median:6.2f}  "
            f"CI [{s.ci_low:6.2f}, {s.ci_high:6.2f}]"
        )
    failed = [r for r in results if not r.ok]
    if failed:
        print(f"  {len(failed)} trial(s) failed")


def main() -> int:
    import os

    os.chdir(REPO_ROOT)  # cassette paths in the plan are repo-relative
    run_one("heuristic.toml", "heuristic")
    run_one("cassette_fixtures.toml", "cassettes")
    return 0


if __name__ == "__main__":
    sys.exit(main())
