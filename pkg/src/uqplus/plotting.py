"""Timing and term-count figure for a verification run."""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

_COLORS = {"pass": "#4c9a5f", "fail": "#c0392b", "skipped": "#999999"}


def plot_checks(specs, path):
    names = [s.name for s in specs]
    colors = [_COLORS.get(s.status, "#999999") for s in specs]
    ys = range(len(specs))
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 0.45 * len(specs) + 1.5), sharey=True)
    ax1.barh(ys, [max(s.millis, 0.1) for s in specs], color=colors)
    ax1.set_xscale("log")
    ax1.set_xlabel("wall time (ms)")
    ax1.set_yticks(list(ys))
    ax1.set_yticklabels(names)
    ax1.invert_yaxis()
    ax2.barh(ys, [max(s.max_terms, 1) for s in specs], color=colors)
    ax2.set_xscale("log")
    ax2.set_xlabel("largest product (terms)")
    fig.suptitle("identity checks (green: pass, red: fail)")
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return path
