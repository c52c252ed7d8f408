"""Optional matplotlib rendering of report data to image files.

Figures are written next to the delimited output when a command is
invoked with --figures; nothing here runs otherwise.
"""
from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .montecarlo import SampleReport

FAMILY_PARAM = {"rect": "k", "stair": "n", "diamond": "t"}


def render_sample_figure(report: SampleReport, outdir: str) -> str:
    """Empirical scaled moments with 4-sigma bars against the limit constants."""
    os.makedirs(outdir, exist_ok=True)
    rs = [r for r, _, _ in report.scaled_moments]
    values = [v for _, v, _ in report.scaled_moments]
    errors = [4 * se for _, _, se in report.scaled_moments]
    targets = [v for _, v in report.limit_targets]

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.errorbar(rs, values, yerr=errors, fmt="o", capsize=4, label="sampled (4 s.e.)")
    ax.plot(rs, targets, "x", markersize=10, label="limit constant")
    ax.set_xticks(rs)
    ax.set_xlabel("moment order r")
    ax.set_ylabel("scaled moment")
    title = f"{report.family} n={report.n}"
    if report.alpha is not None:
        title += f" alpha={report.alpha}"
    ax.set_title(f"{title}, {report.num_samples} samples, seed {report.seed}")
    ax.legend()
    fig.tight_layout()
    path = os.path.join(
        outdir, f"sample_{report.family}_n{report.n}_seed{report.seed}.png"
    )
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_table_figure(family: str, rows: list[dict], outdir: str) -> str:
    """Mean distance per table row, on a log scale when the spread is large."""
    os.makedirs(outdir, exist_ok=True)
    labels = []
    means = []
    for row in rows:
        if family == "rect":
            labels.append(f"{row['m']}x{row['k']}")
        else:
            labels.append(str(row[FAMILY_PARAM[family]]))
        means.append(row["mean_num"] / row["mean_den"])

    fig, ax = plt.subplots(figsize=(max(6, 0.5 * len(rows)), 4))
    ax.plot(range(len(rows)), means, "o-")
    ax.set_xticks(range(len(rows)))
    ax.set_xticklabels(labels, rotation=45 if family == "rect" else 0)
    ax.set_xlabel({"rect": "m x k", "stair": "n", "diamond": "t"}[family])
    ax.set_ylabel("mean distance")
    if means and max(means) / max(min(means), 1e-12) > 50:
        ax.set_yscale("log")
    ax.set_title(f"mean pairwise distance, {family} family")
    fig.tight_layout()
    path = os.path.join(outdir, f"table_{family}.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
