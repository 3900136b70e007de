"""Report rendering: matplotlib figures and delimited files.

The CLI's report commands write CSV/JSON next to PNG figures; everything
here is deterministic given its inputs.
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .graphs import Graph

FIGURE_DPI = 150


# -- layouts ---------------------------------------------------------------------


def _tree_positions(g: Graph, verts: list[int]) -> dict[int, tuple[float, float]]:
    from .census import tree_centroids

    sub = g.induced_subgraph(verts)
    root = tree_centroids(sub)[0]
    adj = sub.adjacency()
    pos: dict[int, tuple[float, float]] = {}
    next_leaf_x = [0.0]

    def place(v: int, parent: int, depth: int) -> float:
        children = sorted(w for w in adj[v] if w != parent)
        if not children:
            x = next_leaf_x[0]
            next_leaf_x[0] += 1.0
        else:
            xs = [place(w, v, depth + 1) for w in children]
            x = sum(xs) / len(xs)
        pos[v] = (x, -float(depth))
        return x

    place(root, -1, 0)
    return {verts[v]: xy for v, xy in pos.items()}


def _cycle_positions(g: Graph, verts: list[int]) -> dict[int, tuple[float, float]]:
    sub = g.induced_subgraph(verts)
    adj = sub.adjacency()
    order = [0]
    prev = -1
    while len(order) < sub.n:
        nxt = min(w for w in adj[order[-1]] if w != prev)
        prev = order[-1]
        order.append(nxt)
    radius = max(0.8, sub.n / 4.0)
    pos = {}
    for i, v in enumerate(order):
        angle = 2 * math.pi * i / sub.n
        pos[verts[v]] = (radius * math.cos(angle), radius * math.sin(angle))
    return pos


def graph_positions(g: Graph) -> dict[int, tuple[float, float]]:
    """Per-component layout: layered for trees, circular otherwise."""
    pos: dict[int, tuple[float, float]] = {}
    x_offset = 0.0
    for comp in g.components():
        verts = sorted(comp)
        sub = g.induced_subgraph(verts)
        if sub.n == 1:
            local = {verts[0]: (0.0, 0.0)}
        elif sub.is_tree():
            local = _tree_positions(g, verts)
        elif all(d == 2 for d in sub.degrees()):
            local = _cycle_positions(g, verts)
        else:
            radius = max(0.8, sub.n / 4.0)
            local = {
                v: (
                    radius * math.cos(2 * math.pi * i / sub.n),
                    radius * math.sin(2 * math.pi * i / sub.n),
                )
                for i, v in enumerate(verts)
            }
        xs = [x for x, _ in local.values()]
        shift = x_offset - min(xs)
        for v, (x, y) in local.items():
            pos[v] = (x + shift, y)
        x_offset += (max(xs) - min(xs)) + 2.0
    return pos


def draw_graph(ax, g: Graph, title: str | None = None) -> None:
    pos = graph_positions(g)
    for u, v in g.sorted_edges():
        ax.plot(
            [pos[u][0], pos[v][0]],
            [pos[u][1], pos[v][1]],
            color="0.3",
            linewidth=1.4,
            zorder=1,
        )
    xs = [pos[v][0] for v in range(g.n)]
    ys = [pos[v][1] for v in range(g.n)]
    ax.scatter(xs, ys, s=120, color="#4878cf", edgecolors="black", zorder=2)
    for v in range(g.n):
        ax.annotate(
            str(v), pos[v], ha="center", va="center", fontsize=7, color="white", zorder=3
        )
    if title:
        ax.set_title(title, fontsize=9)
    ax.set_aspect("equal")
    ax.axis("off")


def render_graph_grid(
    graphs: list[Graph], labels: list[str], path: Path, suptitle: str | None = None
) -> None:
    cols = min(len(graphs), 3)
    rows = (len(graphs) + cols - 1) // cols
    fig, axes = plt.subplots(rows, cols, figsize=(4.2 * cols, 3.4 * rows), squeeze=False)
    for ax in axes.flat:
        ax.axis("off")
    for ax, g, label in zip(axes.flat, graphs, labels):
        draw_graph(ax, g, label)
    if suptitle:
        fig.suptitle(suptitle)
    fig.tight_layout()
    fig.savefig(path, dpi=FIGURE_DPI)
    plt.close(fig)


def render_coefficient_tables(
    tables: dict[int, dict[int, tuple[int, ...]]],
    names: dict[int, tuple[str, ...]],
    path: Path,
) -> None:
    """One panel per subtree size, each a rendered coefficient table."""
    fig, axes = plt.subplots(len(tables), 1, figsize=(8.0, 1.1 * sum(len(t) for t in tables.values()) / len(tables) + 2.5 * len(tables)), squeeze=False)
    for ax, m in zip(axes.flat, sorted(tables)):
        table = tables[m]
        ax.axis("off")
        cell_text = [[f"{v:,}" for v in table[d]] for d in sorted(table)]
        the_table = ax.table(
            cellText=cell_text,
            rowLabels=[f"d={d}" for d in sorted(table)],
            colLabels=list(names[m]),
            loc="center",
            cellLoc="right",
        )
        the_table.scale(1.0, 1.3)
        ax.set_title(f"Covering-walk coefficients, subtrees with {m} edges", fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=FIGURE_DPI)
    plt.close(fig)


# -- delimited output --------------------------------------------------------------


def write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def write_json(path: Path, obj: dict) -> None:
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


def coefficient_table_rows(
    tables: dict[int, dict[int, tuple[int, ...]]], names: dict[int, tuple[str, ...]]
) -> tuple[list[str], list[list]]:
    """Long-form rows (m, d, tree, value) covering every table cell."""
    rows = []
    for m in sorted(tables):
        for d in sorted(tables[m]):
            for name, value in zip(names[m], tables[m][d]):
                rows.append([m, d, name, value])
    return ["m", "d", "tree", "coefficient"], rows


def write_wide_coefficient_tables(
    outdir: Path,
    tables: dict[int, dict[int, tuple[int, ...]]],
    names: dict[int, tuple[str, ...]],
) -> list[Path]:
    """One CSV per subtree size in the published layout: rows d, columns
    tree names."""
    paths = []
    for m in sorted(tables):
        path = outdir / f"tables_{m}edges.csv"
        rows = [[d, *tables[m][d]] for d in sorted(tables[m])]
        write_csv(path, ["d", *names[m]], rows)
        paths.append(path)
    return paths
