"""Render automata to image files with matplotlib.

States sit on a circle in sorted order, so a given model always produces
the same picture.  ``render_diagnosis`` draws the subject automaton with
the transitions a constraint eliminated in dashed red, which makes the
hazardous part of a behavior model visible at a glance.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Circle, FancyArrowPatch

from .automata import InterfaceAutomaton
from .dot import edge_label

__all__ = ["render_automaton", "render_diagnosis"]

_NODE_RADIUS = 0.12
_EDGE_COLOR = "#404040"
_DROP_COLOR = "#c0392b"


def _layout(states: list) -> dict:
    n = max(len(states), 1)
    radius = 1.0 if n > 1 else 0.0
    return {
        q: (radius * math.cos(2 * math.pi * i / n - math.pi / 2),
            radius * math.sin(2 * math.pi * i / n - math.pi / 2))
        for i, q in enumerate(states)
    }


def _draw_self_loop(ax, x, y, label, color, style):
    loop = FancyArrowPatch(
        (x - 0.06, y + _NODE_RADIUS), (x + 0.06, y + _NODE_RADIUS),
        connectionstyle="arc3,rad=2.6",
        arrowstyle="-|>", mutation_scale=10,
        color=color, linestyle=style, linewidth=1.0,
    )
    ax.add_patch(loop)
    ax.text(x, y + _NODE_RADIUS + 0.26, label, ha="center", va="bottom",
            fontsize=7, color=color)


def render_automaton(
    a: InterfaceAutomaton,
    path,
    *,
    drop_atoms=frozenset(),
    title: str | None = None,
) -> None:
    """Draw ``a`` and save it to ``path`` (format chosen by extension).

    Transitions whose name contains an atom from ``drop_atoms`` are drawn
    dashed in red.
    """
    states = a.sorted_states()
    pos = _layout(states)
    fig, ax = plt.subplots(figsize=(6.4, 6.4))

    # parallel edges between the same ordered pair get increasing curvature
    groups: dict = {}
    for t in a.sorted_transitions():
        groups.setdefault((t.source, t.target), []).append(t)

    for (source, target), ts in sorted(groups.items()):
        for k, t in enumerate(ts):
            dropped = bool(drop_atoms & t.name)
            color = _DROP_COLOR if dropped else _EDGE_COLOR
            style = (0, (4, 2)) if dropped else "solid"
            label = edge_label(a, t)
            x1, y1 = pos[t.source]
            x2, y2 = pos[t.target]
            if source == target:
                _draw_self_loop(ax, x1, y1, label, color, style)
                continue
            rad = 0.15 + 0.12 * k
            arrow = FancyArrowPatch(
                (x1, y1), (x2, y2),
                connectionstyle=f"arc3,rad={rad}",
                arrowstyle="-|>", mutation_scale=12,
                shrinkA=14, shrinkB=14,
                color=color, linestyle=style, linewidth=1.2,
            )
            ax.add_patch(arrow)
            mx, my = (x1 + x2) / 2, (y1 + y2) / 2
            nx, ny = -(y2 - y1), (x2 - x1)
            norm = math.hypot(nx, ny) or 1.0
            off = rad * 0.9
            ax.text(mx + nx / norm * off, my + ny / norm * off, label,
                    ha="center", va="center", fontsize=7, color=color)

    for q in states:
        x, y = pos[q]
        ring = 1.8 if q in a.start else 1.0
        ax.add_patch(Circle((x, y), _NODE_RADIUS, fill=True, facecolor="white",
                            edgecolor="black", linewidth=ring, zorder=3))
        ax.text(x, y, q, ha="center", va="center", fontsize=7, zorder=4)

    ax.set_xlim(-1.7, 1.7)
    ax.set_ylim(-1.7, 1.7)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(title if title is not None else a.name)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def render_diagnosis(a: InterfaceAutomaton, report, path) -> None:
    """Draw the subject with the eliminated transitions struck out in red."""
    dropped = ",".join(report.sorted_eliminated()) or "none"
    render_automaton(
        a,
        path,
        drop_atoms=frozenset(report.eliminated),
        title=f"{a.name} (eliminated: {dropped})",
    )
