// Live session client: POST /session then a WebSocket tick loop.
//
// The loop sends the latest pointer position once per server tick with a
// single frame in flight; intermediate pointer moves coalesce. State shown
// to the renderer comes exclusively from acknowledged server frames.

import { encodeTick, isError, Incoming, InitResponse, Pair, parseFrame, parseInit } from "./protocol.js";
import { clampToDisk, Vec } from "./transform.js";

export type Status = "idle" | "connecting" | "playing" | "captured" | "disconnected";

export interface WsLike {
  send(data: string): void;
  close(): void;
  onopen: ((ev?: unknown) => void) | null;
  onmessage: ((ev: { data: unknown }) => void) | null;
  onclose: ((ev?: unknown) => void) | null;
  onerror: ((ev?: unknown) => void) | null;
}

export interface SessionConfig {
  baseUrl: string;
  space?: "disk" | "circle";
  speedCap?: number | null;
  fetchFn?: typeof fetch;
  wsFactory?: (url: string) => WsLike;
}

export interface ArenaState {
  t: number;
  lion: Pair; // last acknowledged input
  man: Pair;
  dist: number;
  captured: boolean;
}

export class SessionClient {
  status: Status = "idle";
  state: ArenaState | null = null;
  dt = 1 / 60;
  sessionId = "";
  onFrame: ((s: ArenaState) => void) | null = null;
  onStatus: ((s: Status, detail?: string) => void) | null = null;

  private cfg: SessionConfig;
  private ws: WsLike | null = null;
  private pointer: Vec = { x: 0, y: 0 };
  private pendingLion: Pair | null = null; // the input awaiting its ack
  private expectedT = 0;
  private timer: ReturnType<typeof setInterval> | null = null;

  constructor(cfg: SessionConfig) {
    this.cfg = cfg;
  }

  private setStatus(s: Status, detail?: string) {
    this.status = s;
    this.onStatus?.(s, detail);
  }

  async connect(): Promise<InitResponse> {
    const doFetch = this.cfg.fetchFn ?? fetch;
    this.setStatus("connecting");
    const body: Record<string, unknown> = {};
    if (this.cfg.space) body.space = this.cfg.space;
    if (this.cfg.speedCap !== undefined) body.speed_cap = this.cfg.speedCap;
    let resp: Response;
    try {
      resp = await doFetch(`${this.cfg.baseUrl}/session`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
      });
    } catch (err) {
      this.setStatus("disconnected", "server unreachable");
      throw err instanceof Error ? err : new Error("server unreachable");
    }
    if (!resp.ok) {
      this.setStatus("disconnected", `server said ${resp.status}`);
      throw new Error(`session create failed: ${resp.status}`);
    }
    const init = parseInit(await resp.json());
    this.sessionId = init.id;
    this.dt = init.dt;
    this.expectedT = init.dt;
    this.state = {
      t: init.init.t,
      lion: init.init.lion,
      man: init.init.man,
      dist: Math.hypot(init.init.man[0] - init.init.lion[0], init.init.man[1] - init.init.lion[1]),
      captured: false,
    };
    this.pointer = { x: init.init.lion[0], y: init.init.lion[1] };

    const wsUrl = this.cfg.baseUrl.replace(/^http/, "ws") + `/session/${init.id}`;
    const make = this.cfg.wsFactory ?? ((u: string) => new WebSocket(u) as unknown as WsLike);
    const ws = make(wsUrl);
    this.ws = ws;
    await new Promise<void>((resolve, reject) => {
      ws.onopen = () => resolve();
      ws.onerror = (e) => reject(e instanceof Error ? e : new Error("websocket error"));
    });
    ws.onmessage = (ev) => this.handleMessage(String(ev.data));
    ws.onclose = () => {
      if (this.status !== "captured") this.setStatus("disconnected");
    };
    ws.onerror = () => this.setStatus("disconnected", "websocket error");
    this.setStatus("playing");
    return init;
  }

  /** Latest pointer wins; called freely between ticks (coalesced). */
  setPointer(p: Vec) {
    this.pointer = clampToDisk(p);
  }

  /** Send one tick if the line is free. Returns true when a frame went out. */
  tickOnce(): boolean {
    if (this.status !== "playing" || !this.ws || this.pendingLion) return false;
    const lion: Pair = [this.pointer.x, this.pointer.y];
    this.pendingLion = lion;
    this.ws.send(encodeTick(this.expectedT, lion));
    return true;
  }

  start() {
    if (this.timer) return;
    this.timer = setInterval(() => this.tickOnce(), this.dt * 1000);
  }

  stop() {
    if (this.timer) clearInterval(this.timer);
    this.timer = null;
    this.ws?.close();
  }

  private handleMessage(raw: string) {
    let frame: Incoming;
    try {
      frame = parseFrame(raw);
    } catch {
      this.pendingLion = null;
      return;
    }
    if (isError(frame)) {
      if (frame.error === "out_of_order" && typeof frame.expected_t === "number") {
        this.expectedT = frame.expected_t; // resync and retry next tick
        this.pendingLion = null;
        return;
      }
      if (frame.error === "gone") {
        this.setStatus("captured", "session closed");
      }
      this.pendingLion = null;
      return;
    }
    const lion = this.pendingLion ?? (this.state ? this.state.lion : ([0, 0] as Pair));
    this.pendingLion = null;
    this.expectedT = frame.t + this.dt;
    this.state = {
      t: frame.t,
      lion,
      man: frame.man,
      dist: frame.dist,
      captured: frame.captured,
    };
    this.onFrame?.(this.state);
    if (frame.captured) {
      this.setStatus("captured");
      this.stop();
    }
  }
}
