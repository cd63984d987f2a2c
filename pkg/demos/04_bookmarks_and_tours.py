#!/usr/bin/env python3
"""Bookmarks stored in space, recalled by vicinity, sequenced into a tour.

Walks the portal to three viewpoints, bookmarks each with its adjustments,
asks "what did I save near here?", then authors a tour over the bookmarks and
renders it to numbered frames (demos/out/04/).
"""

import os

import numpy as np

from portalens import (
    DEFAULT_CAMERA,
    Dataset,
    Pose,
    SessionEngine,
    Vec3,
    nearby_bookmarks,
    render_tour,
)
from portalens.events import (
    BookmarkCreate,
    BookmarkRecall,
    ClutchDown,
    ClutchUp,
    PinchUpdate,
    PoseSample,
    TourFromBookmarks,
)

OUT = os.path.join(os.path.dirname(__file__), "out", "04")


def helix(n=6, samples=100):
    named = []
    for k in range(n):
        t = np.linspace(0, 1, samples)
        ang = 4 * np.pi * t + k
        r = 20 + 5 * k
        named.append(
            (f"h{k}", np.column_stack([50 + r * np.cos(ang), 50 + r * np.sin(ang), t * 600]))
        )
    return Dataset.from_arrays(named)


def main():
    engine = SessionEngine(helix(), DEFAULT_CAMERA)
    stations = [
        (Pose(Vec3(0, 0, 0)), 1.0, "overview"),
        (Pose(Vec3(0.2, 0.1, -0.3)), 1.6, "north face, zoomed"),
        (Pose(Vec3(-0.3, -0.05, -0.2)), 1.0, "low angle"),
    ]
    t = 0.0
    for pose, zoom, label in stations:
        engine.process(PoseSample(t, pose))
        engine.process(ClutchDown(t + 1))
        if zoom != 1.0:
            engine.process(PinchUpdate(t + 2, (400.0, 300.0), zoom))
        engine.process(BookmarkCreate(t + 3, label))
        engine.process(ClutchUp(t + 4))
        t += 10

    print("bookmarks in the store:")
    for bid, bm in sorted(engine.store.bookmarks.items()):
        p = bm.device_pose.position
        print(f"  #{bid} {bm.label!r} at ({p.x:+.2f}, {p.y:+.2f}, {p.z:+.2f}), zoom {bm.pinch_zoom}")

    here = Pose(Vec3(0.15, 0.05, -0.25))
    close = nearby_bookmarks(engine.store, here, radius_m=0.5)
    print(f"\nnear ({here.position.x}, {here.position.y}, {here.position.z}):")
    for bm in close:
        d = (bm.device_pose.position - here.position).norm()
        print(f"  #{bm.id} {bm.label!r} ({d:.2f} m away)")

    print(f"\nrecalling bookmark #{close[0].id} re-enters its frozen view")
    engine.process(BookmarkRecall(t, close[0].id))
    print(f"mode after recall: {engine.state.mode.value}, zoom {engine.state.pinch_zoom}")
    engine.process(ClutchUp(t + 1))

    engine.process(TourFromBookmarks(t + 2, 2.0, (1, 2, 3)))
    tour = engine.tours[1]
    print(f"\ntour over bookmarks 1-3: {tour.total_duration} s")
    n = render_tour(tour, 5, engine.dataset, OUT, DEFAULT_CAMERA)
    print(f"rendered {n} frames at 5 fps into {OUT}")


if __name__ == "__main__":
    main()
