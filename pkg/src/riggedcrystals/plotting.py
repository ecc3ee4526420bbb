"""Matplotlib renderings for the report paths of the CLI."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .graph import node_id  # noqa: E402


def save_check_figure(report: dict, path: str) -> None:
    """Bar chart of samples checked per rank and side, violations overlaid."""
    rows = report["rows"]
    labels = [f'{row["side"][:3]} n={row["n"]}' for row in rows]
    samples = [row["samples"] for row in rows]
    bad = [row["bad_samples"] for row in rows]

    fig, ax = plt.subplots(figsize=(6.4, 3.2))
    xs = range(len(rows))
    ax.bar(xs, samples, color="#4878cf", label="samples checked")
    if any(bad):
        ax.bar(xs, bad, color="#d65f5f", label="samples with violations")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=30, ha="right", fontsize=8)
    ax.set_ylabel("triangles")
    ax.set_title(f'inequality suites, entries <= {report["bound"]}, '
                 f'{len(report["violations"])} violations')
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_graph_figure(nodes, edges, depths: dict, path: str) -> None:
    """Layered drawing of the crystal ball: depth on the vertical axis."""
    by_depth = {}
    for rc in nodes:
        by_depth.setdefault(depths[rc], []).append(rc)
    coords = {}
    for d, layer in by_depth.items():
        for k, rc in enumerate(layer):
            coords[node_id(rc)] = (k - (len(layer) - 1) / 2.0, -d)

    fig, ax = plt.subplots(figsize=(7.2, 4.8))
    colors = plt.cm.tab10.colors
    seen_labels = set()
    for src, i, dst in edges:
        (x0, y0), (x1, y1) = coords[node_id(src)], coords[node_id(dst)]
        label = f"f{i}" if i not in seen_labels else None
        seen_labels.add(i)
        ax.plot([x0, x1], [y0, y1], color=colors[(i - 1) % 10], lw=0.8,
                alpha=0.7, label=label, zorder=1)
    xs = [coords[node_id(rc)][0] for rc in nodes]
    ys = [coords[node_id(rc)][1] for rc in nodes]
    ax.scatter(xs, ys, s=18, color="black", zorder=2)
    ax.set_yticks(sorted({-d for d in by_depth}))
    ax.set_yticklabels([str(-y) for y in sorted({-d for d in by_depth})])
    ax.set_ylabel("distance from highest weight")
    ax.set_xticks([])
    ax.legend(fontsize=8, loc="upper right")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
