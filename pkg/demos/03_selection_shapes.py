#!/usr/bin/env python3
"""Sculpting 3D selections: lasso cones, multi-pose intersection, tubes.

A lasso drawn on a frozen view sweeps a cone through the cube. Two lassos
from different vantage points AND together, carving a genuinely 3D region
a single screen gesture cannot express. The tube selector picks everything
within a radius of a hand-drawn polyline and stays editable afterwards.
"""

import numpy as np

from portalens import (
    DEFAULT_ANCHOR,
    DEFAULT_CAMERA,
    Dataset,
    LassoVolume,
    Pose,
    Quat,
    TubeSelector,
    Vec3,
    edit_tube,
    intersect_select,
    lasso_select,
    tube_select,
    view_from_pose,
)

CAM = DEFAULT_CAMERA


def grid_walks(n=30, samples=50):
    rng = np.random.default_rng(11)
    named = []
    for k in range(n):
        start = rng.uniform(0, 100, 2)
        steps = rng.standard_normal((samples - 1, 2)) * 3
        xy = np.vstack([start, start + np.cumsum(steps, axis=0)])
        t = np.arange(samples) * 60.0
        named.append((f"w{k:02d}", np.column_stack([xy, t])))
    return Dataset.from_arrays(named)


def look_from(offset, turn=Quat.identity()):
    center = DEFAULT_ANCHOR.pose.transform(Vec3(0.5, 0.5, 0.5) * DEFAULT_ANCHOR.scale)
    return Pose(center + offset, turn)


def main():
    dataset = grid_walks()
    print(f"{len(dataset.ids)} random walks, {dataset.n_samples} samples\n")

    front = view_from_pose(look_from(Vec3(0, 0, 1.0)), DEFAULT_ANCHOR, CAM)
    square = np.array([[290.0, 190.0], [510.0, 190.0], [510.0, 410.0], [290.0, 410.0]])
    single = lasso_select(dataset, LassoVolume(square, front))
    print(f"single lasso from the front: {len(single.ids)} walks")
    print(single.serialize() or "(empty)\n", end="")

    side = view_from_pose(
        look_from(Vec3(1.0, 0, 0), Quat.rot_y(np.pi / 2)), DEFAULT_ANCHOR, CAM
    )
    both = intersect_select(
        dataset,
        [LassoVolume(square, front), LassoVolume(square, side)],
    )
    print(f"\nsame square from two orthogonal poses, intersected: {len(both.ids)} walks")
    print(f"(every intersected id is in the single-lasso set: "
          f"{set(both.ids) <= set(single.ids)})")

    tube = TubeSelector(np.array([[0.1, 0.1, 0.1], [0.5, 0.5, 0.5], [0.9, 0.4, 0.8]]), 0.05)
    picked = tube_select(dataset, tube)
    print(f"\ntube radius 0.05 along a diagonal stroke: {len(picked.ids)} walks")
    wider = edit_tube(tube, new_radius=0.15)
    picked_wide = tube_select(dataset, wider)
    print(f"after widening the radius to 0.15: {len(picked_wide.ids)} walks "
          f"(superset: {set(picked.ids) <= set(picked_wide.ids)})")
    bent = edit_tube(wider, 1, new_position=(0.5, 0.9, 0.5))
    print(f"after dragging the middle control point up: {len(tube_select(dataset, bent).ids)} walks")


if __name__ == "__main__":
    main()
