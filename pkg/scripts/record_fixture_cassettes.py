#!/usr/bin/env python3
"""Regenerate the cassette fixtures used by the hermetic experiment tests.

Records the deterministic heuristic under all four cognitive
configurations, three trials each, into tests/fixtures/cassettes/.
The heuristic ignores seeds, so per-trial recordings are identical;
they are still recorded per trial to match the replay file layout.
"""
from __future__ import annotations

import sys
from pathlib import Path

from cogcity.harness import run_trial
from cogcity.harness.cognitive import ALL_CONFIGS
from cogcity.policies import Cassette, HeuristicPolicy, RecordingPolicy
from cogcity.sim import ROLE_ORDER, SimParams, Topology

TRIALS = 3
MASTER_SEED = 2024


def main() -> int:
    out_dir = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "cassettes"
    out_dir.mkdir(parents=True, exist_ok=True)
    params, topology = SimParams(), Topology()
    for config in ALL_CONFIGS:
        for trial in range(TRIALS):
            cassette = Cassette()
            policy = RecordingPolicy(HeuristicPolicy(topology), cassette)
            policies = {role: policy for role in ROLE_ORDER}
            transcript = run_trial(
                params, topology, config, policies, seed=MASTER_SEED + trial,
                policy_label="heuristic",
            )
            path = out_dir / f"replay-{config.name}__t{trial}.json"
            cassette.save(path)
            print(
                f"recorded {path.name}: {len(cassette.entries)} calls, "
                f"final score {transcript.final_score:.2f}"
            )
    return 0


if __name__ == "__main__":
    sys.exit(main())
