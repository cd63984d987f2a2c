#!/usr/bin/env python3
"""One event stream, three transports, identical results.

Writes a trace file, replays it through the engine, then feeds the very same
events over the socket protocol, and shows that the final state files agree
byte for byte. This determinism is what makes sessions testable and tours
exactly reproducible.
"""

import os

import numpy as np

from portalens import Dataset, PortalClient, PortalServer, serialize_state
from portalens.events import event_fields, event_name
from portalens.replay import replay_events
from portalens.trace import parse_trace, serialize_trace

OUT = os.path.join(os.path.dirname(__file__), "out", "06")
os.makedirs(OUT, exist_ok=True)

SCRIPT = """PORTALENS-TRACE v1
0	POSE	0	0	0	1	0	0	0
5	THUMB_ARC	0.3
10	CLUTCH_DOWN
20	PINCH_UPDATE	400	300	1.4
30	LASSO_POINT	260	200
40	LASSO_POINT	540	200
50	LASSO_POINT	540	400
60	LASSO_CLOSE	260	400
70	TOOLGLASS_PIN	green	400	300
80	BOOKMARK_CREATE	demo spot
90	CLUTCH_UP
100	POSE	0.05	0	-0.1	1	0	0	0
"""


def two_routes():
    t = np.arange(30.0)
    a = np.column_stack([t * 3, 20 + np.sin(t / 4) * 10, t])
    b = np.column_stack([90 - t * 3, 60 + np.cos(t / 5) * 8, t])
    return Dataset.from_arrays([("eastbound", a), ("westbound", b)])


def main():
    dataset = two_routes()
    events = parse_trace(SCRIPT)
    trace_path = os.path.join(OUT, "session.trace")
    with open(trace_path, "w") as f:
        f.write(serialize_trace(events))
    print(f"wrote {trace_path} ({len(events)} events)")

    engine = replay_events(events, dataset)
    state_replay = serialize_state(engine.store, engine.tours)
    print(f"replay: {len(engine.effect_log)} effects, selection = {engine.selection.ids}")

    server = PortalServer(dataset).start()
    try:
        client = PortalClient("127.0.0.1", server.port)
        print(f"serving on port {server.port}, protocol v{client.hello['version']}")
        for e in events:
            client.send_event(event_name(e), e.t, event_fields(e))
        rs = client.query("render_state")
        state_socket = client.query("statefile")["text"]
        client.close()
    finally:
        server.stop()

    print(f"socket session mode: {rs['mode']}, selected: {rs['selected']}")
    print(f"state files byte-identical across transports: {state_replay == state_socket}")
    with open(os.path.join(OUT, "state.portalens"), "w") as f:
        f.write(state_replay)


if __name__ == "__main__":
    main()
