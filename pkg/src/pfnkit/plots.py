"""Figure rendering for sweep reports.

Batch only: figures go straight to files next to the CSV output, never to
an interactive window.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .mcdm import SweepTable


def render_sweep(table: SweepTable, path: str, dpi: int = 150) -> None:
    """Plot score-versus-gamma curves, one line per alternative."""
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    gammas = [row.gamma for row in table.rows]
    for name in table.alternatives:
        ax.plot(gammas, [row.scores[name] for row in table.rows], label=name)
    ax.set_xlabel("gamma")
    ax.set_ylabel("score")
    ax.set_title(f"{table.operator} / {table.family} t-norm")
    ax.grid(True, alpha=0.3)
    ax.legend(loc="best", fontsize="small")
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
