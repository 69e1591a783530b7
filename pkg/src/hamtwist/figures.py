"""Render verification-report figures next to the JSON Lines output."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

_STATUS_COLOR = {"pass": "#2e7d32", "fail": "#c62828", "skipped": "#9e9e9e"}


def _suite_of(record):
    return record.check_id.split("/", 1)[0]


def render_status_grid(records, path):
    """One row per suite, one cell per check, colored by status."""
    suites = []
    for rec in records:
        s = _suite_of(rec)
        if s not in suites:
            suites.append(s)
    width = max(sum(1 for r in records if _suite_of(r) == s) for s in suites)
    fig, ax = plt.subplots(figsize=(max(6, 0.45 * width), 0.5 * len(suites) + 1.2))
    for row, suite in enumerate(suites):
        col = 0
        for rec in records:
            if _suite_of(rec) != suite:
                continue
            ax.add_patch(plt.Rectangle((col, len(suites) - 1 - row), 0.92, 0.92,
                         color=_STATUS_COLOR.get(rec.status, "#9e9e9e")))
            col += 1
    ax.set_yticks([len(suites) - 1 - i + 0.46 for i in range(len(suites))])
    ax.set_yticklabels(suites)
    ax.set_xlim(0, width)
    ax.set_ylim(0, len(suites))
    ax.set_xticks([])
    ax.set_title("check status by suite (green = pass, red = fail)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_timing_chart(records, path):
    """Total wall time per suite."""
    totals = {}
    for rec in records:
        s = _suite_of(rec)
        totals[s] = totals.get(s, 0.0) + rec.wall_time_ms
    suites = list(totals)
    fig, ax = plt.subplots(figsize=(7, 0.4 * len(suites) + 1.4))
    ax.barh(range(len(suites)), [totals[s] for s in suites], color="#1565c0")
    ax.set_yticks(range(len(suites)))
    ax.set_yticklabels(suites)
    ax.invert_yaxis()
    ax.set_xlabel("wall time (ms)")
    ax.set_title("suite wall time")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_report_figures(records, outdir):
    os.makedirs(outdir, exist_ok=True)
    grid = os.path.join(outdir, "check_status.png")
    timing = os.path.join(outdir, "suite_timing.png")
    render_status_grid(records, grid)
    render_timing_chart(records, timing)
    return [grid, timing]
