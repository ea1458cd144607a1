"""Result emission: CSV tables, a JSON summary, and a self-contained SVG chart.

Everything is written with fixed formatting and ordering so regenerating
from the same inputs is byte-identical.
"""
from __future__ import annotations

import csv
import json
from pathlib import Path

from .runner import TrialResult
from .stats import BootstrapSummary

CONFIG_COLORS = {
    "base": "#8c8c8c",
    "tom": "#4e79a7",
    "ib": "#e15759",
    "tom_ib": "#59a14f",
}
CONFIG_LABELS = {
    "base": "Base",
    "tom": "ToM only",
    "ib": "IB only",
    "tom_ib": "ToM + IB",
}


def _fmt(value: float | None) -> str:
    return "" if value is None else str(value)


def write_results_csv(results: list[TrialResult], path: Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(
            [
                "cell_id",
                "config",
                "policy",
                "trial",
                "seed",
                "final_score",
                "verified_turn_fraction",
                "invalid_actions",
                "transcript_path",
            ]
        )
        for r in results:
            writer.writerow(
                [
                    r.cell_id,
                    r.config,
                    r.policy,
                    r.trial,
                    r.seed,
                    _fmt(r.final_score),
                    _fmt(r.verified_turn_fraction),
                    "" if r.invalid_action_count is None else r.invalid_action_count,
                    r.transcript_path,
                ]
            )


def write_summary_csv(summaries: list[BootstrapSummary], path: Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["cell_id", "config", "policy", "n", "median", "ci_low", "ci_high"])
        for s in summaries:
            writer.writerow([s.cell_id, s.config, s.policy, s.n, s.median, s.ci_low, s.ci_high])


def write_summary_json(summaries: list[BootstrapSummary], path: Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump([s.to_json() for s in summaries], fh, indent=2, sort_keys=True)
        fh.write("\n")


def render_chart_svg(summaries: list[BootstrapSummary]) -> str:
    """Grouped bar chart: one group per policy, one bar per configuration.

    Bars are medians, whiskers are the bootstrap interval bounds. Inline
    styles only; no external fonts or ids.
    """
    width, height = 720, 420
    left, right, top, bottom = 64, 20, 48, 72
    plot_w, plot_h = width - left - right, height - top - bottom
    y_max = 100.0

    policies = []
    for s in summaries:
        if s.policy not in policies:
            policies.append(s.policy)
    groups = {p: [s for s in summaries if s.policy == p] for p in policies}

    def y(value: float) -> float:
        return top + plot_h * (1.0 - value / y_max)

    parts: list[str] = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif">'
    )
    parts.append(f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>')
    parts.append(
        f'<text x="{width / 2:.1f}" y="22" text-anchor="middle" font-size="15" fill="#222">'
        "Bootstrapped median final health by configuration</text>"
    )
    for tick in range(0, 101, 20):
        ty = y(tick)
        parts.append(
            f'<line x1="{left}" y1="{ty:.2f}" x2="{width - right}" y2="{ty:.2f}" '
            'stroke="#dddddd" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{left - 8}" y="{ty + 4:.2f}" text-anchor="end" font-size="11" '
            f'fill="#444">{tick}</text>'
        )
    parts.append(
        f'<text x="16" y="{top + plot_h / 2:.1f}" text-anchor="middle" font-size="12" fill="#222" '
        f'transform="rotate(-90 16 {top + plot_h / 2:.1f})">median final health</text>'
    )

    group_w = plot_w / max(len(policies), 1)
    for gi, policy in enumerate(policies):
        bars = groups[policy]
        gx = left + gi * group_w
        slot = group_w / (len(bars) + 1)
        bar_w = min(slot * 0.8, 48.0)
        for bi, s in enumerate(bars):
            cx = gx + slot * (bi + 1)
            bx = cx - bar_w / 2
            by = y(s.median)
            color = CONFIG_COLORS.get(s.config, "#777777")
            parts.append(
                f'<rect x="{bx:.2f}" y="{by:.2f}" width="{bar_w:.2f}" '
                f'height="{y(0) - by:.2f}" fill="{color}"/>'
            )
            lo, hi = y(s.ci_low), y(s.ci_high)
            parts.append(
                f'<line x1="{cx:.2f}" y1="{lo:.2f}" x2="{cx:.2f}" y2="{hi:.2f}" '
                'stroke="#222222" stroke-width="1.5"/>'
            )
            for wy in (lo, hi):
                parts.append(
                    f'<line x1="{cx - 6:.2f}" y1="{wy:.2f}" x2="{cx + 6:.2f}" y2="{wy:.2f}" '
                    'stroke="#222222" stroke-width="1.5"/>'
                )
            parts.append(
                f'<text x="{cx:.2f}" y="{by - 6:.2f}" text-anchor="middle" font-size="10" '
                f'fill="#222">{s.median:.2f}</text>'
            )
        parts.append(
            f'<text x="{gx + group_w / 2:.2f}" y="{height - bottom + 20}" text-anchor="middle" '
            f'font-size="12" fill="#222">{policy}</text>'
        )

    parts.append(
        f'<line x1="{left}" y1="{y(0):.2f}" x2="{width - right}" y2="{y(0):.2f}" '
        'stroke="#222222" stroke-width="1"/>'
    )

    seen_configs: list[str] = []
    for s in summaries:
        if s.config not in seen_configs:
            seen_configs.append(s.config)
    lx = left
    ly = height - 26
    for config in seen_configs:
        color = CONFIG_COLORS.get(config, "#777777")
        parts.append(f'<rect x="{lx}" y="{ly - 10}" width="12" height="12" fill="{color}"/>')
        label = CONFIG_LABELS.get(config, config)
        parts.append(
            f'<text x="{lx + 16}" y="{ly}" font-size="11" fill="#222">{label}</text>'
        )
        lx += 16 + 8 * len(label) + 24
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def emit_outputs(
    results: list[TrialResult], summaries: list[BootstrapSummary], out_dir: str | Path
) -> dict[str, Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = {
        "results_csv": out_dir / "results.csv",
        "summary_csv": out_dir / "summary.csv",
        "summary_json": out_dir / "summary.json",
        "chart_svg": out_dir / "chart.svg",
    }
    write_results_csv(results, paths["results_csv"])
    write_summary_csv(summaries, paths["summary_csv"])
    write_summary_json(summaries, paths["summary_json"])
    paths["chart_svg"].write_text(render_chart_svg(summaries), encoding="utf-8")
    return paths
