"""Matplotlib renderings written next to the delimited/JSON report output.

All figures are rendered headlessly to files; nothing here affects the
numeric reports.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .complexes import SimplicialComplex
from .hasse import HasseDiagram


def plot_hasse_diagram(H: HasseDiagram, path: str | Path) -> Path:
    """Layered drawing of a Hasse diagram: one row per simplex dimension."""
    path = Path(path)
    by_dim: dict[int, list] = {}
    for node in H.nodes:
        by_dim.setdefault(len(node) - 1, []).append(node)
    pos = {}
    for dim, nodes in sorted(by_dim.items()):
        for i, node in enumerate(nodes):
            pos[node] = (i - (len(nodes) - 1) / 2.0, dim)

    fig, ax = plt.subplots(figsize=(8, 5))
    for sigma, tau in H.edges:
        xs, ys = zip(pos[sigma], pos[tau])
        ax.plot(xs, ys, color="0.6", linewidth=0.8, zorder=1)
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    ax.scatter(xs, ys, s=30, color="tab:blue", zorder=2)
    for node, (x, y) in pos.items():
        ax.annotate(
            ",".join(map(str, node)), (x, y),
            textcoords="offset points", xytext=(0, 6),
            ha="center", fontsize=7,
        )
    ax.set_yticks(sorted(by_dim))
    ax.set_ylabel("dimension")
    ax.set_xticks([])
    ax.set_title(f"Hasse diagram: {len(H.nodes)} nodes, {len(H.edges)} edges")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_f_vector(K: SimplicialComplex, path: str | Path, title: str = "f-vector") -> Path:
    path = Path(path)
    fig, ax = plt.subplots(figsize=(5, 3.5))
    if K.simplices:
        ax.bar(range(len(K.f_vector)), K.f_vector, color="tab:blue")
    ax.set_xlabel("simplex dimension")
    ax.set_ylabel("count")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_betti(reduced: tuple[int, ...], field: str, path: str | Path) -> Path:
    path = Path(path)
    fig, ax = plt.subplots(figsize=(5, 3.5))
    if reduced:
        ax.bar(range(len(reduced)), reduced, color="tab:orange")
    ax.set_xlabel("degree")
    ax.set_ylabel("reduced Betti number")
    ax.set_title(f"reduced homology over {field}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_bound_thresholds(h: int, d: int, path: str | Path) -> Path:
    """h against the connectivity thresholds 2d+1 and 4d+1."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.bar(["h"], [h], color="tab:blue")
    ax.axhline(2 * d + 1, color="tab:green", linestyle="--", label="connected: 2d+1")
    ax.axhline(4 * d + 1, color="tab:red", linestyle="--", label="simply connected: 4d+1")
    ax.set_ylabel("Hasse edge count")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
