#!/usr/bin/env python3
"""Cube faces as 2D projections, and the thumb-arc time filter.

Looking at a face of the space-time cube collapses one axis: straight down
gives the geography of all routes, a side face gives a distance-over-time
picture. The thumb arc maps to a time window that hides late samples.
"""

import os

import numpy as np

from portalens import Dataset, apply_filter, project_heatmap
from portalens.dataset import visible_trajectories
from portalens.render import heatmap_to_ppm

OUT = os.path.join(os.path.dirname(__file__), "out", "05")
os.makedirs(OUT, exist_ok=True)


def commuting(n=40, samples=60):
    rng = np.random.default_rng(3)
    hubs = np.array([[20.0, 20.0], [80.0, 30.0], [50.0, 85.0]])
    named = []
    for k in range(n):
        a, b = rng.choice(len(hubs), 2, replace=False)
        t = np.linspace(0, 1, samples)
        wander = np.cumsum(rng.standard_normal((samples, 2)), axis=0) * 0.8
        xy = hubs[a] + (hubs[b] - hubs[a]) * t[:, None] + wander
        named.append((f"trip{k:02d}", np.column_stack([xy, t * 1440])))
    return Dataset.from_arrays(named)


def main():
    dataset = commuting()
    for axis, meaning in [("t", "geography of all trips"),
                          ("x", "east-west position over time"),
                          ("y", "north-south position over time")]:
        grid = project_heatmap(dataset, axis, 64)
        path = os.path.join(OUT, f"face_{axis}.ppm")
        with open(path, "wb") as f:
            f.write(heatmap_to_ppm(grid.counts))
        print(f"axis {axis}: {meaning:<35} peak bin {grid.counts.max():4d}  -> {path}")

    print("\nthumb-arc filter sweep (samples with normalized time <= 1 - f stay visible):")
    for f in (0.0, 0.25, 0.5, 0.75, 1.0):
        vis = apply_filter(dataset, f)
        ids = visible_trajectories(dataset, f)
        print(f"  f={f:4.2f}: {int(vis.sum()):5d} samples, {len(ids):2d} trips visible")


if __name__ == "__main__":
    main()
