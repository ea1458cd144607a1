"""Bootstrapped median with a percentile confidence interval."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class BootstrapSummary:
    cell_id: str
    config: str
    policy: str
    n: int
    median: float
    ci_low: float
    ci_high: float
    resamples: int
    confidence: float
    n_failed: int = 0

    def to_json(self) -> dict:
        return {
            "cell_id": self.cell_id,
            "config": self.config,
            "policy": self.policy,
            "n": self.n,
            "median": self.median,
            "ci_low": self.ci_low,
            "ci_high": self.ci_high,
            "resamples": self.resamples,
            "confidence": self.confidence,
            "n_failed": self.n_failed,
        }


def bootstrap_median(
    samples: list[float],
    resamples: int = 10_000,
    confidence: float = 0.95,
    seed: int = 0,
) -> BootstrapSummary:
    """Sample median plus a percentile interval over resampled medians.

    Samples are sorted before resampling, so the result is invariant
    under permutation of the input. The interval is clamped to contain
    the sample median.
    """
    if not samples:
        raise ValueError("bootstrap_median needs at least one sample")
    data = np.sort(np.asarray(samples, dtype=float))
    median = float(np.median(data))
    rng = np.random.default_rng(seed)
    indices = rng.integers(0, len(data), size=(resamples, len(data)))
    medians = np.median(data[indices], axis=1)
    alpha = (1.0 - confidence) / 2.0
    ci_low = float(np.percentile(medians, alpha * 100.0))
    ci_high = float(np.percentile(medians, (1.0 - alpha) * 100.0))
    return BootstrapSummary(
        cell_id="",
        config="",
        policy="",
        n=len(data),
        median=median,
        ci_low=min(ci_low, median),
        ci_high=max(ci_high, median),
        resamples=resamples,
        confidence=confidence,
    )
