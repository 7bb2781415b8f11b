"""Matplotlib renderings of Hessenberg grids and conjugated complements,
written to image files alongside the CLI's text/JSON reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Rectangle

from .complement import CellSet, full_string_heights, _string_cells
from .perms import HessenbergFunction

SHADED = "#b0b0b0"
STRING_DOT = "black"


def _draw_boxes(ax, n: int, unshaded: set[tuple[int, int]]):
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            color = "white" if (i, j) in unshaded else SHADED
            # row i drawn top-down to match the matrix convention
            ax.add_patch(
                Rectangle((j - 1, n - i), 1, 1, facecolor=color, edgecolor="black")
            )
    ax.set_xlim(0, n)
    ax.set_ylim(0, n)
    ax.set_aspect("equal")
    ax.axis("off")


def draw_hess_grid(h: HessenbergFunction, path: str, title: str | None = None):
    """Shaded boxes (i,j) with i <= h(j); unshaded boxes form the standard
    complement."""
    n = h.n
    unshaded = {(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i > h(j)}
    fig, ax = plt.subplots(figsize=(0.5 * n + 1, 0.5 * n + 1))
    _draw_boxes(ax, n, unshaded)
    ax.set_title(title or f"h = {h}")
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)


def draw_complement_grid(cells: CellSet, path: str, title: str | None = None):
    """The conjugated complement as unshaded boxes, with contained lower
    diagonal full-strings marked by dots."""
    n = cells.n
    fig, ax = plt.subplots(figsize=(0.5 * n + 1, 0.5 * n + 1))
    _draw_boxes(ax, n, set(cells.cells))
    for height in full_string_heights(cells):
        for (i, j) in _string_cells(n, height + 1):
            ax.plot(j - 0.5, n - i + 0.5, "o", color=STRING_DOT, markersize=6)
    if title:
        ax.set_title(title)
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)
