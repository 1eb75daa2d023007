"""Corpus statistics: a CSV table plus matplotlib figures written next to it."""

from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .embedding import inner_vertices, min_trees  # noqa: E402
from .generators import random_squaregraph  # noqa: E402
from .genset import hull_report, min_generating_set  # noqa: E402
from .recognition import is_two_connected  # noqa: E402
from .splits import theta_classes  # noqa: E402

COLUMNS = ["seed", "steps", "two_connected", "vertices", "edges", "zones", "inner", "trees", "genset", "h", "s"]

RCPARAMS = {
    "figure.dpi": 120,
    "figure.figsize": (8, 3),
    "axes.grid": True,
    "grid.color": "lightgray",
    "grid.linewidth": 0.5,
    "font.size": 9,
}


def corpus_rows(count: int, max_steps: int = 30, seed0: int = 0):
    for seed in range(seed0, seed0 + count):
        steps = seed % (max_steps + 1)
        two = seed % 2 == 0
        g = random_squaregraph(seed, steps, two)
        yield {
            "seed": seed,
            "steps": steps,
            "two_connected": int(is_two_connected(g)),
            "vertices": len(g),
            "edges": len(g.edges),
            "zones": len(theta_classes(g)) if len(g) > 1 else 0,
            "inner": len(inner_vertices(g)),
            "trees": min_trees(g).value,
            "genset": len(min_generating_set(g)),
            "h": (hr := hull_report(g)).h,
            "s": hr.s,
        }


def write_report(outdir: str, count: int, max_steps: int = 30, seed0: int = 0) -> dict:
    os.makedirs(outdir, exist_ok=True)
    rows = list(corpus_rows(count, max_steps, seed0))
    table = os.path.join(outdir, "corpus.csv")
    with open(table, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=COLUMNS)
        w.writeheader()
        w.writerows(rows)

    with plt.rc_context(RCPARAMS):
        fig, (ax1, ax2) = plt.subplots(1, 2)
        trees = [r["trees"] for r in rows]
        bins = range(1, max(trees + [5]) + 2)
        ax1.hist(trees, bins=bins, align="left", rwidth=0.8, color="#1f77b4")
        ax1.set_xlabel("trees needed")
        ax1.set_ylabel("instances")
        ax2.scatter([r["vertices"] for r in rows], [r["genset"] for r in rows], s=8, c=trees, cmap="viridis")
        ax2.set_xlabel("vertices")
        ax2.set_ylabel("min generating set")
        fig.tight_layout()
        figure = os.path.join(outdir, "corpus.png")
        fig.savefig(figure, metadata={"Software": None})
        plt.close(fig)
    return {"csv": table, "figure": figure, "instances": len(rows)}
