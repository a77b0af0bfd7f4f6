"""Figures written next to the CLI reports (PNG/SVG/PDF chosen by file suffix)."""
from __future__ import annotations

from itertools import combinations
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .arrangement import Arrangement  # noqa: E402
from .exact_math import rref  # noqa: E402


def figure_style():
    plt.rcParams.update({
        "font.size": 10,
        "axes.spines.top": False,
        "axes.spines.right": False,
        "savefig.bbox": "tight",
        "savefig.dpi": 150,
    })


def _vertices(A: Arrangement):
    pts = []
    for g, h in combinations(A, 2):
        m, r, piv = rref([g.row(), h.row()])
        if r == 2 and piv == [0, 1]:
            pts.append((float(m[0][2]), float(m[1][2])))
    return pts


def plot_arrangement_2d(A: Arrangement, regions: Sequence = (), path: str = "arrangement.png",
                        title: str = "") -> str:
    """Draw lines of a planar arrangement and the sample point of each region.

    Bounded regions are marked with filled dots, unbounded ones with hollow dots.
    """
    if A.dim != 2:
        raise ValueError("only planar arrangements can be drawn")
    figure_style()
    pts = _vertices(A) + [(float(r.sample[0]), float(r.sample[1])) for r in regions]
    xs = [p[0] for p in pts] or [0.0]
    ys = [p[1] for p in pts] or [0.0]
    pad = 1.0 + 0.25 * max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    x0, x1, y0, y1 = min(xs) - pad, max(xs) + pad, min(ys) - pad, max(ys) + pad
    fig, ax = plt.subplots(figsize=(5, 5))
    for h, lab in zip(A, A.labels):
        (a, b), c = (float(h.normal[0]), float(h.normal[1])), float(h.offset)
        if abs(b) > 1e-12:
            ax.plot([x0, x1], [(c - a * x0) / b, (c - a * x1) / b], lw=1.2, label=lab)
        else:
            ax.plot([c / a, c / a], [y0, y1], lw=1.2, label=lab)
    for k, r in enumerate(regions):
        sx, sy = float(r.sample[0]), float(r.sample[1])
        ax.plot(sx, sy, "o", ms=5, mfc="k" if r.relatively_bounded else "w", mec="k")
        ax.annotate(str(k), (sx, sy), textcoords="offset points", xytext=(4, 4), fontsize=7)
    ax.set_xlim(x0, x1)
    ax.set_ylim(y0, y1)
    ax.set_aspect("equal")
    ax.legend(fontsize=7, loc="upper left", frameon=False)
    if title:
        ax.set_title(title)
    fig.savefig(path)
    plt.close(fig)
    return path


def plot_roots(roots: Sequence[complex], center: float, path: str, title: str = "") -> str:
    figure_style()
    fig, ax = plt.subplots(figsize=(4, 5))
    ax.axvline(center, color="0.6", lw=1, ls="--")
    ax.plot([z.real for z in roots], [z.imag for z in roots], "o", ms=5)
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    if title:
        ax.set_title(title)
    fig.savefig(path)
    plt.close(fig)
    return path
