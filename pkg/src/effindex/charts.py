"""SVG charts for ranked reports, contributions, group means, and D vs H.

matplotlib is imported lazily with the Agg backend so importing this
module never needs a display.  SVG metadata dates and hash salts are
pinned so repeated runs produce stable output.
"""
from __future__ import annotations

from .index import EfficiencyReport

_COLORS = {"h": "#4878a8", "d": "#d8854f", "ae": "#6fa66f"}


def _pyplot():
    import matplotlib
    matplotlib.use("Agg", force=False)
    matplotlib.rcParams["svg.hashsalt"] = "effindex"
    import matplotlib.pyplot as plt
    return plt


def _save(fig, path):
    fig.savefig(path, format="svg", metadata={"Date": None})
    import matplotlib.pyplot as plt
    plt.close(fig)


def rank_chart(reports: list[EfficiencyReport], path) -> None:
    """Horizontal bars of the index per symbol, most efficient on top."""
    plt = _pyplot()
    labels = [r.symbol for r in reports]
    values = [r.ei for r in reports]
    fig, ax = plt.subplots(figsize=(8, 0.32 * len(reports) + 1.2))
    pos = range(len(reports) - 1, -1, -1)
    ax.barh(list(pos), values, color=_COLORS["h"])
    ax.set_yticks(list(pos), labels=labels, fontsize=8)
    ax.set_xlabel("efficiency index (lower = closer to random walk)")
    fig.tight_layout()
    _save(fig, path)


def contribution_chart(reports: list[EfficiencyReport], path) -> None:
    """Stacked squared deviations per symbol in ranked order."""
    plt = _pyplot()
    labels = [r.symbol for r in reports]
    pos = list(range(len(reports) - 1, -1, -1))
    fig, ax = plt.subplots(figsize=(8, 0.32 * len(reports) + 1.2))
    left = [0.0] * len(reports)
    parts = (
        ("hurst", [r.contrib_h for r in reports], _COLORS["h"]),
        ("dimension", [r.contrib_d for r in reports], _COLORS["d"]),
        ("entropy", [r.contrib_ae for r in reports], _COLORS["ae"]),
    )
    for name, vals, color in parts:
        ax.barh(pos, vals, left=left, color=color, label=name)
        left = [x + v for x, v in zip(left, vals)]
    ax.set_yticks(pos, labels=labels, fontsize=8)
    ax.set_xlabel("squared deviation from benchmark (sums to EI^2)")
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    _save(fig, path)


def group_chart(means: list[tuple[str, float]], path) -> None:
    """Bars of mean index per group, most efficient group first."""
    plt = _pyplot()
    labels = [g for g, _ in means]
    values = [v for _, v in means]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(range(len(means)), values, color=_COLORS["d"])
    ax.set_xticks(range(len(means)), labels=labels, rotation=20,
                  ha="right", fontsize=9)
    ax.set_ylabel("mean efficiency index")
    fig.tight_layout()
    _save(fig, path)


def scatter_chart(reports: list[EfficiencyReport], slope: float,
                  intercept: float, path) -> None:
    """Mean dimension against mean Hurst with the fitted line."""
    plt = _pyplot()
    xs = [r.measures.h_avg for r in reports]
    ys = [r.measures.d_avg for r in reports]
    fig, ax = plt.subplots(figsize=(6, 5))
    ax.scatter(xs, ys, color=_COLORS["h"], s=24)
    for r, x, y in zip(reports, xs, ys):
        ax.annotate(r.symbol, (x, y), fontsize=6,
                    textcoords="offset points", xytext=(3, 3))
    lo, hi = min(xs), max(xs)
    pad = 0.05 * (hi - lo) if hi > lo else 0.05
    xs_line = (lo - pad, hi + pad)
    ax.plot(xs_line, [slope * x + intercept for x in xs_line],
            color=_COLORS["d"],
            label=f"fit: D = {slope:.3f} H + {intercept:.3f}")
    ax.set_xlabel("mean Hurst exponent")
    ax.set_ylabel("mean fractal dimension")
    ax.legend(fontsize=8)
    fig.tight_layout()
    _save(fig, path)
