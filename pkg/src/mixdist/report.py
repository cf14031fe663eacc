"""Render benchmark CSV into log-log scaling figures and a slope table.

Takes the CSV produced by the bench command (stdout contract unchanged)
and writes, into an output directory: one PNG per shape with runtime
curves per algorithm, and slopes.csv holding the fitted log-log slope of
each (shape, algo) series. The slope is the empirical scaling exponent:
about 1 for linear algorithms on these grids, about 2 for quadratic.
"""

from __future__ import annotations

import csv
import io
import os
from collections import defaultdict

import numpy as np

SLOPES_HEADER = ["shape", "algo", "points", "slope"]

_ALGO_STYLE = {
    "fast": ("tab:blue", "o"),
    "coloring": ("tab:orange", "s"),
    "naive": ("tab:red", "^"),
    "nodal": ("tab:green", "d"),
}


def read_bench_csv(text: str) -> list[dict]:
    rows = list(csv.DictReader(io.StringIO(text)))
    required = {"n", "shape", "algo", "repeats", "seconds_median", "distance"}
    if not rows or not required.issubset(rows[0].keys()):
        raise ValueError("not a bench CSV: expected header n,shape,algo,repeats,seconds_median,distance")
    return rows


def fit_slope(ns, seconds) -> float:
    """Least-squares slope of log2(seconds) against log2(n)."""
    x = np.log2(np.asarray(ns, dtype=float))
    y = np.log2(np.asarray(seconds, dtype=float))
    return float(np.polyfit(x, y, 1)[0])


def write_report(csv_text: str, out_dir: str) -> list[str]:
    """Write per-shape figures and slopes.csv; returns the created paths."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    rows = read_bench_csv(csv_text)
    series = defaultdict(list)  # (shape, algo) -> [(n, seconds)]
    for row in rows:
        series[(row["shape"], row["algo"])].append((int(row["n"]), float(row["seconds_median"])))

    os.makedirs(out_dir, exist_ok=True)
    created = []

    shapes = sorted({shape for shape, _ in series})
    for shape in shapes:
        fig, ax = plt.subplots(figsize=(6.0, 4.5))
        for (s, algo), points in sorted(series.items()):
            if s != shape:
                continue
            points.sort()
            ns = [p[0] for p in points]
            secs = [p[1] for p in points]
            color, marker = _ALGO_STYLE.get(algo, ("tab:gray", "x"))
            label = algo
            if len(points) >= 2:
                label = f"{algo} (slope {fit_slope(ns, secs):.2f})"
            ax.loglog(ns, secs, color=color, marker=marker, base=2, label=label)
        ax.set_xlabel("leaves n")
        ax.set_ylabel("median seconds")
        ax.set_title(f"mixture distance runtime, {shape} trees")
        ax.grid(True, which="both", alpha=0.3)
        ax.legend()
        fig.tight_layout()
        path = os.path.join(out_dir, f"scaling_{shape}.png")
        fig.savefig(path, dpi=150)
        plt.close(fig)
        created.append(path)

    slope_path = os.path.join(out_dir, "slopes.csv")
    with open(slope_path, "w", newline="", encoding="ascii") as fh:
        writer = csv.writer(fh)
        writer.writerow(SLOPES_HEADER)
        for (shape, algo), points in sorted(series.items()):
            if len(points) < 2:
                continue
            points.sort()
            ns = [p[0] for p in points]
            secs = [p[1] for p in points]
            writer.writerow([shape, algo, len(points), f"{fit_slope(ns, secs):.4f}"])
    created.append(slope_path)
    return created
