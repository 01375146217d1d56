"""Optional figure rendering for the CLI report path.

Figures are drawn with matplotlib into files next to the primary output:
shape graphs and complex 1-skeletons via a seeded spring layout, and
pass/fail summaries of check suites as bar charts.  Rendering never affects
report content.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import networkx as nx

from .complexes import TwoComplex
from .graphs import Graph


def _layout(g: "nx.MultiDiGraph", seed: int):
    return nx.spring_layout(g, seed=seed)


def render_graph(graph: Graph, path: str, seed: int = 0, title: str | None = None) -> str:
    g = nx.MultiDiGraph()
    g.add_nodes_from(graph.vertices)
    for e, s, d in graph.edges:
        g.add_edge(s, d, key=e)
    pos = _layout(g, seed)
    fig, ax = plt.subplots(figsize=(4.5, 4.0))
    nx.draw_networkx_nodes(g, pos, ax=ax, node_color="#86b5d9", node_size=600)
    nx.draw_networkx_labels(g, pos, ax=ax, font_size=8)
    nx.draw_networkx_edges(
        g, pos, ax=ax, connectionstyle="arc3,rad=0.12", arrows=True, edge_color="#555555"
    )
    if title:
        ax.set_title(title, fontsize=10)
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_complex(x: TwoComplex, path: str, seed: int = 0, title: str | None = None) -> str:
    """Draw the 1-skeleton; face count is reported in the caption."""
    g = nx.MultiDiGraph()
    g.add_nodes_from(x.vertices)
    for e, s, d in x.edges:
        g.add_edge(s, d, key=e)
    pos = _layout(g, seed)
    fig, ax = plt.subplots(figsize=(5.0, 4.4))
    nx.draw_networkx_nodes(g, pos, ax=ax, node_color="#a9d18e", node_size=420)
    if len(x.vertices) <= 30:
        nx.draw_networkx_labels(g, pos, ax=ax, font_size=7)
    nx.draw_networkx_edges(
        g, pos, ax=ax, connectionstyle="arc3,rad=0.1", arrows=True, edge_color="#666666"
    )
    caption = f"{len(x.vertices)} vertices, {len(x.edges)} edges, {len(x.faces)} faces"
    ax.set_title(f"{title or 'complex'} ({caption})", fontsize=10)
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_verdicts(verdicts: dict[str, bool], path: str, title: str = "checks") -> str:
    names = list(verdicts)
    values = [1 if verdicts[n] else 0 for n in names]
    colors = ["#4c9e4f" if v else "#c23b3b" for v in values]
    fig, ax = plt.subplots(figsize=(max(4.0, 0.65 * len(names)), 3.2))
    ax.bar(range(len(names)), [1] * len(names), color=colors)
    ax.set_xticks(range(len(names)))
    ax.set_xticklabels(names, rotation=45, ha="right", fontsize=7)
    ax.set_yticks([])
    ax.set_title(f"{title}: {sum(values)}/{len(values)} passed", fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def figure_path(directory: str, stem: str) -> str:
    os.makedirs(directory, exist_ok=True)
    return os.path.join(directory, f"{stem}.png")
