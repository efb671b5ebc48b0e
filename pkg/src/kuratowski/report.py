"""
Figure export for file-bound reports.

When a command writes its document to a file, payload kinds with a
natural picture also get one rendered next to it: census bar chart,
orbit-size curve, or a composition-table heatmap.  Everything routes
through the Agg backend so no display is ever needed.
"""

import os


def render_figures(payload, out_path):
    """Write the figures for this payload next to out_path; paths back."""
    kind = payload.get("kind")
    if kind not in ("census", "fourteen", "table", "quotient"):
        return []
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    stem = os.path.splitext(out_path)[0]
    done = []
    if kind == "census":
        sizes = sorted(int(k) for k in payload["by_size"])
        counts = [payload["by_size"][str(s)][0] for s in sizes]
        types = [payload["by_size"][str(s)][1] for s in sizes]
        fig, ax = plt.subplots(figsize=(7, 4))
        ax.bar([s - 0.2 for s in sizes], counts, 0.4, label="semigroups")
        ax.bar([s + 0.2 for s in sizes], types, 0.4, label="types")
        ax.set_xlabel("elements")
        ax.set_ylabel("count")
        ax.set_title("census of %s" % payload["scope"])
        ax.set_xticks(sizes)
        ax.legend()
        path = stem + "_sizes.png"
    elif kind == "fourteen":
        ns = [r["n"] for r in payload["results"]]
        tops = [r["max_orbit"] for r in payload["results"]]
        fig, ax = plt.subplots(figsize=(6, 4))
        ax.plot(ns, tops, "o-")
        ax.axhline(14, linestyle="--", linewidth=1)
        ax.set_xlabel("points")
        ax.set_ylabel("largest orbit")
        ax.set_title("distinct images of a single set")
        ax.set_xticks(ns)
        ax.set_yticks(range(0, 16, 2))
        path = stem + "_orbits.png"
    else:
        names = payload["names"]
        idx = {n: i for i, n in enumerate(names)}
        grid = [[idx[c] for c in row] for row in payload["entries"]]
        fig, ax = plt.subplots(figsize=(6, 5))
        im = ax.imshow(grid, cmap="viridis")
        ax.set_xticks(range(len(names)), names, rotation=90, fontsize=7)
        ax.set_yticks(range(len(names)), names, fontsize=7)
        ax.set_title("composition table")
        fig.colorbar(im, ax=ax, ticks=range(len(names)))
        path = stem + "_table.png"
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    done.append(path)
    return done
