"""Matplotlib renderers: portrait disk diagrams and ray-trace overlays.

Figures are written to files (SVG or PNG by extension) next to whatever
delimited output a command produces.  SVG output is deterministic: the hash
salt is pinned and the date metadata stripped, so rendering the same inputs
twice gives identical bytes.
"""

from __future__ import annotations

import math
from fractions import Fraction

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Arc as ArcPatch

from .portrait import OrbitPortrait, PortraitKind

_SET_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"]


def _point(t) -> tuple[float, float]:
    theta = 2 * math.pi * float(t)
    return math.cos(theta), math.sin(theta)


def portrait_figure(portrait: OrbitPortrait, label_angles: bool = True):
    """Disk diagram of a portrait: one chord polygon per angle set.

    The circle at infinity carries a tick and fraction label per ray angle;
    the characteristic arc is drawn thick just outside the circle.
    """
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.set_aspect("equal")
    ax.axis("off")
    circle = plt.Circle((0, 0), 1.0, fill=False, color="black", lw=1.0)
    ax.add_patch(circle)

    for idx, angle_set in enumerate(portrait.angle_sets):
        color = _SET_COLORS[idx % len(_SET_COLORS)]
        pts = [_point(t) for t in angle_set]
        if len(pts) == 1:
            ax.plot([pts[0][0]], [pts[0][1]], "o", ms=5, color=color)
        for i in range(len(pts)):
            a = pts[i]
            b = pts[(i + 1) % len(pts)]
            if len(pts) == 2 and i == 1:
                break  # a 2-gon is a single chord
            ax.plot([a[0], b[0]], [a[1], b[1]], color=color, lw=1.4)
        for t, (x, y) in zip(angle_set, pts):
            ax.plot([x, 1.04 * x], [y, 1.04 * y], color="black", lw=0.8)
            if label_angles:
                ax.text(1.13 * x, 1.13 * y, str(t), ha="center", va="center",
                        fontsize=8)

    if portrait.is_nontrivial and portrait.kind is not PortraitKind.ZERO:
        arc = portrait.characteristic_arc
        theta1 = 360.0 * float(arc.start)
        theta2 = 360.0 * float(Fraction(arc.start) + arc.length)
        ax.add_patch(
            ArcPatch((0, 0), 2.16, 2.16, theta1=theta1, theta2=theta2,
                     color="#d62728", lw=2.5)
        )
    ax.set_xlim(-1.3, 1.3)
    ax.set_ylim(-1.3, 1.3)
    return fig


def trace_figure(traces, show_unit_circle: bool = False):
    """Polyline plot of one or more ray traces, landing points marked."""
    fig, ax = plt.subplots(figsize=(6, 6))
    ax.set_aspect("equal")
    for trace in traces:
        xs = [z.real for z in trace.points]
        ys = [z.imag for z in trace.points]
        ax.plot(xs, ys, lw=1.0, label=f"{trace.plane} ray {trace.angle}")
        if trace.converged:
            z = trace.landing_estimate
            ax.plot([z.real], [z.imag], "k.", ms=6)
    if show_unit_circle:
        ax.add_patch(plt.Circle((0, 0), 1.0, fill=False, color="gray", lw=0.6))
    ax.legend(fontsize=8)
    ax.grid(True, lw=0.3, alpha=0.5)
    return fig


def save_figure(fig, path: str):
    """Write a figure to SVG or PNG with deterministic output bytes."""
    plt.rcParams["svg.hashsalt"] = "orbit-portraits"
    if path.endswith(".svg"):
        fig.savefig(path, format="svg", metadata={"Date": None})
    else:
        fig.savefig(path, dpi=150)
    plt.close(fig)
