# -*- coding: utf-8 -*-
"""
Visualization of max-plus schedule traces.
"""

import logging

import matplotlib.pyplot as plt
import numpy as np

from config import DEFAULT_PLOT_DPI

logger = logging.getLogger(__name__)


def plot_schedule(trace, title="Max-plus schedule", save_filename=None, show=False):
    """
    Plot event times over the steps of a schedule trace.

    The upper panel shows the determinate part of each event time, the lower
    panel its indeterminacy coefficient. Infinite entries leave gaps.

    Parameters
    ----------
    trace         : ScheduleTrace
    title         : plot title
    save_filename : if provided, save the figure to this path
    show          : open an interactive window

    Returns
    -------
    matplotlib Figure
    """
    steps = np.arange(len(trace))
    a = np.array([state.a[:, 0] for state in trace])
    b = np.array([state.b[:, 0] for state in trace])
    a = np.where(np.isfinite(a), a, np.nan)
    b = np.where(np.isfinite(b), b, np.nan)

    fig, (ax_a, ax_b) = plt.subplots(2, 1, figsize=(12, 8), sharex=True)
    colors = plt.cm.tab20.colors

    for i in range(trace.dimension):
        color = colors[i % len(colors)]
        ax_a.plot(steps, a[:, i], color=color, marker='o', linewidth=2.5,
                  alpha=0.7, label=f"Event {i + 1}")
        ax_b.plot(steps, b[:, i], color=color, marker='s', linewidth=2.5,
                  alpha=0.7, linestyle='--')

    ax_a.set_title(title, fontsize=16, fontweight='bold', pad=20)
    ax_a.set_ylabel("Determinate part", fontsize=12)
    ax_b.set_ylabel("I coefficient", fontsize=12)
    ax_b.set_xlabel("Step t", fontsize=12)
    ax_a.legend(bbox_to_anchor=(1.05, 1), loc='upper left', fontsize=9)
    for ax in (ax_a, ax_b):
        ax.grid(True, alpha=0.3, linestyle='--')
    fig.tight_layout()

    if save_filename:
        fig.savefig(save_filename, dpi=DEFAULT_PLOT_DPI, bbox_inches='tight')
        logger.info("✓ Plot saved as %s", save_filename)

    if show:
        plt.show()
    else:
        plt.close(fig)

    return fig
