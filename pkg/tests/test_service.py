"""Session service: protocol, validation, strict causality, scripted drives."""

import json
import math

import pytest
from fastapi.testclient import TestClient

from lionman import BesicovitchMan, SampledPath, TimeGrid, check_no_lookahead
from lionman.finite import replay_strategy
from lionman.service import ServiceSettings, create_app

BOUNDARY_LAG_C = 10.0  # frozen from the calibration run (measured 2.51*dt)


@pytest.fixture
def client():
    return TestClient(create_app(ServiceSettings()))


def make_session(client, **body):
    r = client.post("/session", json=body)
    assert r.status_code == 200
    return r.json()


def test_create_session_default_disk(client):
    init = make_session(client)
    assert init["init"] == {"t": 0.0, "lion": [0.0, 0.0], "man": [1.0, 0.0]}
    assert init["dt"] == pytest.approx(1.0 / 60.0)


def test_circle_session_antipodal(client):
    init = make_session(client, space="circle")
    assert init["init"]["lion"] == [1.0, 0.0]
    assert init["init"]["man"] == [-1.0, 0.0]
    sid, dt = init["id"], init["dt"]
    with client.websocket_connect(f"/session/{sid}") as ws:
        ws.send_json({"t": dt, "lion": [0.0, 1.0]})
        f = ws.receive_json()
        assert f["man"] == [-1.0, 0.0]  # strict: previous lion sample
        ws.send_json({"t": 2 * dt, "lion": [0.0, 1.0]})
        f = ws.receive_json()
        assert f["man"] == [-0.0, -1.0] or f["man"] == [0.0, -1.0]


def test_finite_space_kind_rejected(client):
    r = client.post("/session", json={"space": "sierpinski"})
    assert r.status_code == 400
    r = client.post("/session", json={"space": "square"})
    assert r.status_code == 400


def test_lion_at_center_keeps_man_put(client):
    init = make_session(client)
    sid, dt = init["id"], init["dt"]
    with client.websocket_connect(f"/session/{sid}") as ws:
        for j in range(1, 11):
            ws.send_json({"t": j * dt, "lion": [0.0, 0.0]})
            f = ws.receive_json()
            assert f["man"] == [1.0, 0.0]
            assert f["dist"] == 1.0
            assert not f["captured"]


def test_out_of_order_rejected(client):
    init = make_session(client)
    sid, dt = init["id"], init["dt"]
    with client.websocket_connect(f"/session/{sid}") as ws:
        ws.send_json({"t": 5 * dt, "lion": [0.1, 0.0]})
        f = ws.receive_json()
        assert f["error"] == "out_of_order"
        assert f["expected_t"] == pytest.approx(dt)
        ws.send_json({"t": dt, "lion": [0.1, 0.0]})
        f = ws.receive_json()
        assert "man" in f
        ws.send_json({"t": dt, "lion": [0.1, 0.0]})  # duplicate
        f = ws.receive_json()
        assert f["error"] == "out_of_order"


def test_circle_origin_input_rejected(client):
    init = make_session(client, space="circle")
    sid, dt = init["id"], init["dt"]
    with client.websocket_connect(f"/session/{sid}") as ws:
        ws.send_json({"t": dt, "lion": [0.0, 0.0]})  # cannot clamp onto the circle
        assert ws.receive_json()["error"] == "invalid_position"
        ws.send_json({"t": dt, "lion": [0.0, 2.0]})
        f = ws.receive_json()
        assert "man" in f  # session still alive, clock unchanged


def test_bad_frames_rejected(client):
    init = make_session(client)
    sid = init["id"]
    with client.websocket_connect(f"/session/{sid}") as ws:
        ws.send_text("not json")
        assert ws.receive_json()["error"] == "bad_frame"
        ws.send_json({"lion": [0, 0]})
        assert ws.receive_json()["error"] == "bad_frame"


def test_unknown_session(client):
    r = client.get("/session/zzz/trace")
    assert r.status_code == 404
    with client.websocket_connect("/session/zzz") as ws:
        assert ws.receive_json()["error"] == "unknown session"


def test_input_clamped_to_disk(client):
    init = make_session(client)
    sid, dt = init["id"], init["dt"]
    with client.websocket_connect(f"/session/{sid}") as ws:
        ws.send_json({"t": dt, "lion": [3.0, 4.0]})
        ws.receive_json()
    trace = client.get(f"/session/{sid}/trace").text.strip().split("\n")
    last = json.loads(trace[-1])
    x, y = last["lion"]
    assert math.hypot(x, y) <= 1.0 + 1e-12
    assert abs(x - 0.6) < 1e-12 and abs(y - 0.8) < 1e-12


def test_speed_cap_clamps_displacement(client):
    init = make_session(client, speed_cap=1.0)
    sid, dt = init["id"], init["dt"]
    with client.websocket_connect(f"/session/{sid}") as ws:
        ws.send_json({"t": dt, "lion": [1.0, 0.0]})  # teleport attempt
        ws.receive_json()
    last = json.loads(client.get(f"/session/{sid}/trace").text.strip().split("\n")[-1])
    x, y = last["lion"]
    assert math.hypot(x, y) <= 1.0 * dt + 1e-12


def test_trace_growth_and_schema(client):
    init = make_session(client)
    sid, dt = init["id"], init["dt"]
    trace = client.get(f"/session/{sid}/trace").text.strip().split("\n")
    assert len(trace) == 1  # fresh session: the initial sample only
    with client.websocket_connect(f"/session/{sid}") as ws:
        for j in range(1, 6):
            ws.send_json({"t": j * dt, "lion": [0.05 * j, 0.0]})
            ws.receive_json()
    trace = client.get(f"/session/{sid}/trace").text.strip().split("\n")
    assert len(trace) == 6
    rec = json.loads(trace[3])
    assert set(rec) == {"step", "t", "lion", "man", "dist", "captured"}


def test_teleport_captures_with_cap_off(client):
    """Documented behavior: without a speed cap a teleporting client captures."""
    init = make_session(client)
    sid, dt = init["id"], init["dt"]
    with client.websocket_connect(f"/session/{sid}") as ws:
        # park the lion; the man's reply settles at (1, 0)
        ws.send_json({"t": dt, "lion": [0.2, 0.1]})
        f = ws.receive_json()
        # teleport exactly onto the man's (deterministic) position
        ws.send_json({"t": 2 * dt, "lion": f["man"]})
        f2 = ws.receive_json()
        assert f2["captured"]
        assert f2["dist"] <= 1e-9
    # session is gone after capture
    with client.websocket_connect(f"/session/{sid}") as ws:
        ws.send_json({"t": 3 * dt, "lion": [0.0, 0.0]})
        assert ws.receive_json()["error"] == "gone"
    # trace retrievable, ends at the capture step
    trace = client.get(f"/session/{sid}/trace").text.strip().split("\n")
    assert json.loads(trace[-1])["captured"] is True
    assert len(trace) == 3


def test_sessions_are_independent(client):
    a = make_session(client)
    b = make_session(client)
    assert a["id"] != b["id"]
    with client.websocket_connect(f"/session/{a['id']}") as wa:
        with client.websocket_connect(f"/session/{b['id']}") as wb:
            wa.send_json({"t": a["dt"], "lion": [0.9, 0.0]})
            fa = wa.receive_json()
            wb.send_json({"t": b["dt"], "lion": [0.0, 0.0]})
            fb = wb.receive_json()
    assert fb["man"] == [1.0, 0.0]  # b never saw a's samples
    assert fa["dist"] != fb["dist"]
    trace_a = client.get(f"/session/{a['id']}/trace").text.strip().split("\n")
    trace_b = client.get(f"/session/{b['id']}/trace").text.strip().split("\n")
    assert len(trace_a) == len(trace_b) == 2
    assert json.loads(trace_a[1])["lion"] != json.loads(trace_b[1])["lion"]


def boundary_drive(j, dt):
    t = j * dt
    r = min(1.0, t / 4.0)
    ang = 2 * math.pi * 0.05 * t
    return r * math.cos(ang), r * math.sin(ang)


def test_scripted_drive_300_ticks_boundary_antipodality(client):
    """Secondary acceptance, server side: 300 ticks to the boundary; at
    boundary ticks the reply is antipodal within the frozen C * dt."""
    init = make_session(client)
    sid, dt = init["id"], init["dt"]
    frames = []
    with client.websocket_connect(f"/session/{sid}") as ws:
        for j in range(1, 301):
            x, y = boundary_drive(j, dt)
            ws.send_json({"t": j * dt, "lion": [x, y]})
            f = ws.receive_json()
            assert not f["captured"]
            frames.append((j * dt, complex(x, y), complex(*f["man"])))
    saw_boundary = 0
    for t, lion, man in frames:
        assert abs(abs(man) - 1.0) <= 1e-9  # man lives on the boundary
        if abs(abs(lion) - 1.0) <= 1e-9:
            saw_boundary += 1
            assert abs(man + lion) <= BOUNDARY_LAG_C * dt
    assert saw_boundary > 50


def test_session_transcript_replays_causally(client):
    """The emitted responses equal a strict-mode offline replay, and the
    transcript passes check_no_lookahead."""
    init = make_session(client)
    sid, dt = init["id"], init["dt"]
    sent = []
    got = []
    with client.websocket_connect(f"/session/{sid}") as ws:
        for j in range(1, 121):
            x, y = boundary_drive(j, dt)
            ws.send_json({"t": j * dt, "lion": [x, y]})
            f = ws.receive_json()
            sent.append((j * dt, complex(x, y)))
            got.append(complex(*f["man"]))

    from lionman import DiskSpace

    disk = DiskSpace()
    times = [0.0] + [t for t, _ in sent]
    pts = [0j] + [p for _, p in sent]
    lion_path = SampledPath(disk, times, pts)
    grid = TimeGrid(dt, times[-1])
    replayed = replay_strategy(grid, disk, BesicovitchMan(), lion_path, eval_mode="strict")
    assert replayed[1:] == got  # tick j response == strict replay at t_j

    report = check_no_lookahead(
        grid,
        disk,
        BesicovitchMan(),
        lion_path,
        [20 * dt, 60 * dt, 100 * dt],
        _fork(disk, grid),
        eval_mode="strict",
    )
    assert report.passed


def _fork(disk, grid):
    from lionman.paths import random_disk_path

    def gen(base, tf):
        alt = random_disk_path(int(tf * 1e6) % 97, grid.times[-1])
        times = list(grid.times)
        pts = [base.at(t) if t < tf - 1e-12 else alt.at(t) for t in times]
        return SampledPath(disk, times, pts)

    return gen
