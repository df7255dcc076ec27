#!/usr/bin/env python3
"""Scripted client against the live-play service (runs in-process).

Drives the lion from the center to the rim over 300 ticks and reads the
evader's strictly-causal responses off the WebSocket; then demonstrates the
documented teleport capture with the speed cap off.
"""

import math

from fastapi.testclient import TestClient

from lionman.service import ServiceSettings, create_app

client = TestClient(create_app(ServiceSettings()))

init = client.post("/session", json={}).json()
sid, dt = init["id"], init["dt"]
print(f"session {sid[:8]}...  dt={dt:.4f}  init: lion={init['init']['lion']} man={init['init']['man']}")

with client.websocket_connect(f"/session/{sid}") as ws:
    worst = 0.0
    for j in range(1, 301):
        t = j * dt
        rr = min(1.0, t / 4.0)
        ang = 2 * math.pi * 0.05 * t
        ws.send_json({"t": t, "lion": [rr * math.cos(ang), rr * math.sin(ang)]})
        frame = ws.receive_json()
        if abs(rr - 1.0) <= 1e-9:
            lx, ly = rr * math.cos(ang), rr * math.sin(ang)
            mx, my = frame["man"]
            worst = max(worst, math.hypot(mx + lx, my + ly))
    print(f"300 ticks done; worst boundary antipodality gap: {worst:.4f} ({worst/dt:.2f} dt)")

trace_lines = client.get(f"/session/{sid}/trace").text.strip().split("\n")
print(f"trace has {len(trace_lines)} samples")

print("\nteleport capture (speed cap off is the default):")
init = client.post("/session", json={}).json()
sid, dt = init["id"], init["dt"]
with client.websocket_connect(f"/session/{sid}") as ws:
    ws.send_json({"t": dt, "lion": [0.3, 0.2]})
    frame = ws.receive_json()
    ws.send_json({"t": 2 * dt, "lion": frame["man"]})  # jump onto the evader
    frame = ws.receive_json()
    print(f"  captured: {frame['captured']} at t={frame['t']:.4f} (dist={frame['dist']:.1e})")
print("with a speed cap the same jump gets clamped to cap*dt per tick.")
