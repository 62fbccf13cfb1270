"""Matplotlib figure rendering for the report paths of the CLI.

Figures are written to files next to the JSON/CSV outputs; nothing here
affects the algorithmic results.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def plot_growth(trace, path):
    """Stage-size growth curve of an extension trace."""
    sizes = trace.stage_sizes()
    stages = range(len(sizes))
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(stages, [p for p, _ in sizes], marker="o", label="points")
    ax.plot(stages, [l for _, l in sizes], marker="s", label="lines")
    ax.set_xlabel("stage")
    ax.set_ylabel("element count")
    ax.set_title(f"free extension growth ({trace.mode.value} mode)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_hasse(L, path):
    """Rank-layered drawing of a bounded length-3 lattice."""
    layers = [["0"], list(L.atoms), list(L.coatoms), ["1"]]
    pos = {}
    for rank, layer in enumerate(layers):
        for i, name in enumerate(layer):
            pos[name] = ((i + 1) / (len(layer) + 1), rank)
    fig, ax = plt.subplots(figsize=(8, 6))
    for a in L.elements:
        for b in L.elements:
            if L.covers(a, b):
                (x1, y1), (x2, y2) = pos[a], pos[b]
                ax.plot([x1, x2], [y1, y2], color="0.7", lw=0.8, zorder=1)
    for name, (x, y) in pos.items():
        ax.scatter([x], [y], s=200, color="white", edgecolor="black", zorder=2)
        ax.annotate(
            name, (x, y), ha="center", va="center", fontsize=7, zorder=3
        )
    ax.set_ylim(-0.5, 3.5)
    ax.set_yticks(range(4))
    ax.set_ylabel("rank")
    ax.set_xticks([])
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_harness_report(report, path):
    """Pass/fail bar chart per check category."""
    from collections import Counter

    passed = Counter()
    failed = Counter()
    for r in report.results:
        (passed if r.passed else failed)[r.check] += 1
    checks = sorted(set(passed) | set(failed))
    fig, ax = plt.subplots(figsize=(7, 4))
    xs = range(len(checks))
    ax.bar(xs, [passed[c] for c in checks], label="pass", color="tab:green")
    ax.bar(
        xs,
        [failed[c] for c in checks],
        bottom=[passed[c] for c in checks],
        label="fail",
        color="tab:red",
    )
    ax.set_xticks(list(xs))
    ax.set_xticklabels(checks, rotation=20, ha="right")
    ax.set_ylabel("checks")
    title = report.encoder or "harness"
    ax.set_title(f"harness verdicts ({title})")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
