"""Matplotlib figures for graphs, flex frames and drift reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.collections import LineCollection  # noqa: E402

from .graphs import SimpleGraph  # noqa: E402
from .nac import EdgeColoring  # noqa: E402

RED = "#c0392b"
BLUE = "#2471a3"
GREY = "#555555"


def _edge_colors(graph: SimpleGraph, coloring: EdgeColoring | None) -> list[str]:
    if coloring is None:
        return [GREY] * graph.edge_count
    return [BLUE if b else RED for b in coloring.blue]


def _draw(ax, graph: SimpleGraph, pos: np.ndarray, coloring: EdgeColoring | None, labels: bool) -> None:
    segs = [(pos[u], pos[v]) for u, v in graph.edges]
    ax.add_collection(LineCollection(segs, colors=_edge_colors(graph, coloring), linewidths=1.2))
    ax.scatter(pos[:, 0], pos[:, 1], s=14, c="black", zorder=3)
    if labels and graph.vertex_count <= 40:
        for v, (x, y) in enumerate(pos):
            ax.annotate(str(v), (x, y), fontsize=7, xytext=(3, 3), textcoords="offset points")
    ax.set_aspect("equal")
    ax.autoscale_view()
    ax.axis("off")


def circle_layout(n: int) -> np.ndarray:
    t = 2 * np.pi * np.arange(n) / max(n, 1)
    return np.column_stack([np.cos(t), np.sin(t)])


def save_graph_figure(graph: SimpleGraph, path: str | Path, coloring: EdgeColoring | None = None,
                      positions: np.ndarray | None = None, title: str | None = None) -> Path:
    pos = circle_layout(graph.vertex_count) if positions is None else np.asarray(positions)
    fig, ax = plt.subplots(figsize=(5, 5))
    _draw(ax, graph, pos, coloring, labels=True)
    if title:
        ax.set_title(title, fontsize=9)
    path = Path(path)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
    return path


def save_frame_figure(frame, graph: SimpleGraph, coloring: EdgeColoring, path: str | Path) -> Path:
    return save_graph_figure(graph, path, coloring, frame.positions, title=f"angle = {frame.angle:.4f}")


def save_drift_figure(realization, path: str | Path, samples: int = 180) -> Path:
    """Max edge-length drift and min vertex separation over a full turn."""
    from .flex import _min_separation, evaluate

    angles = np.linspace(0.0, 2 * np.pi, samples, endpoint=False)
    base = evaluate(realization, 0.0).edge_lengths
    drift, sep = [], []
    for a in angles:
        frame = evaluate(realization, a)
        drift.append(float(np.abs(frame.edge_lengths - base).max(initial=0.0)))
        sep.append(_min_separation(frame.positions))
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(6, 5), sharex=True)
    ax1.semilogy(angles, np.maximum(drift, 1e-18), color=GREY)
    ax1.set_ylabel("max length drift")
    ax2.plot(angles, sep, color=BLUE)
    ax2.set_ylabel("min separation")
    ax2.set_xlabel("angle")
    path = Path(path)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
    return path
