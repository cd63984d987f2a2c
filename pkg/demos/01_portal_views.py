#!/usr/bin/env python3
"""Looking through the portal: pose-driven views of a trajectory cube.

Builds a little synthetic flight dataset, pins it in front of the origin and
renders the cube from a handful of device poses, as if walking a phone around
a hologram on a desk. Frames land in demos/out/01/.
"""

import os

import numpy as np

from portalens import (
    DEFAULT_ANCHOR,
    DEFAULT_CAMERA,
    Dataset,
    Pose,
    Quat,
    Vec3,
    render_frame,
    view_from_pose,
)

OUT = os.path.join(os.path.dirname(__file__), "out", "01")
os.makedirs(OUT, exist_ok=True)


def spiral_flights(n_flights=8, n_samples=80):
    named = []
    rng = np.random.default_rng(42)
    for k in range(n_flights):
        t = np.linspace(0, 1, n_samples)
        phase = rng.uniform(0, 2 * np.pi)
        r = 30 + 10 * np.sin(3 * t * np.pi + phase)
        x = 50 + r * np.cos(2 * np.pi * (t + phase))
        y = 50 + r * np.sin(2 * np.pi * (t + phase))
        named.append((f"flight{k}", np.column_stack([x, y, t * 3600.0])))
    return Dataset.from_arrays(named)


def main():
    dataset = spiral_flights()
    print(f"dataset: {len(dataset.ids)} flights, {dataset.n_samples} samples")
    print(f"anchor: {DEFAULT_ANCHOR.scale} m per data unit (a ~50 cm cube)")

    # the cube center sits 0.8 m in front of the origin pose, so orbit it
    center = DEFAULT_ANCHOR.pose.transform(Vec3(0.5, 0.5, 0.5) * DEFAULT_ANCHOR.scale)
    stations = {
        "front": Pose(Vec3(0, 0, 0)),
        "closer": Pose(Vec3(0, 0, -0.35)),
        "from_right": Pose(
            Vec3(center.x + 0.8, center.y, center.z), Quat.rot_y(np.pi / 2)
        ),
        "from_above": Pose(
            Vec3(center.x, center.y + 0.8, center.z), Quat.rot_x(-np.pi / 2)
        ),
    }
    for name, pose in stations.items():
        view = view_from_pose(pose, DEFAULT_ANCHOR, DEFAULT_CAMERA)
        frame = render_frame(dataset, view)
        path = os.path.join(OUT, f"{name}.ppm")
        with open(path, "wb") as f:
            f.write(frame)
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
