// Wire protocol for the session service. The client renders ONLY what the
// server sends back; no extrapolation happens anywhere in the UI.

export type Pair = [number, number];

export interface InitState {
  t: number;
  lion: Pair;
  man: Pair;
}

export interface InitResponse {
  id: string;
  dt: number;
  init: InitState;
}

export interface ServerFrame {
  t: number;
  man: Pair;
  dist: number;
  captured: boolean;
}

export interface ErrorFrame {
  error: string;
  expected_t?: number;
}

export type Incoming = ServerFrame | ErrorFrame;

function isPair(x: unknown): x is Pair {
  return Array.isArray(x) && x.length === 2 && x.every((v) => typeof v === "number" && isFinite(v));
}

export function parseInit(obj: unknown): InitResponse {
  const o = obj as Record<string, unknown>;
  if (!o || typeof o.id !== "string" || typeof o.dt !== "number") {
    throw new Error("malformed session response");
  }
  const init = o.init as Record<string, unknown>;
  if (!init || typeof init.t !== "number" || !isPair(init.lion) || !isPair(init.man)) {
    throw new Error("malformed init state");
  }
  return { id: o.id, dt: o.dt, init: { t: init.t, lion: init.lion, man: init.man } };
}

export function parseFrame(raw: string): Incoming {
  let obj: unknown;
  try {
    obj = JSON.parse(raw);
  } catch {
    throw new Error("frame is not JSON");
  }
  const o = obj as Record<string, unknown>;
  if (typeof o.error === "string") {
    const out: ErrorFrame = { error: o.error };
    if (typeof o.expected_t === "number") out.expected_t = o.expected_t;
    return out;
  }
  if (typeof o.t === "number" && isPair(o.man) && typeof o.dist === "number" && typeof o.captured === "boolean") {
    return { t: o.t, man: o.man, dist: o.dist, captured: o.captured };
  }
  throw new Error("malformed server frame");
}

export function isError(f: Incoming): f is ErrorFrame {
  return (f as ErrorFrame).error !== undefined;
}

export function encodeTick(t: number, lion: Pair): string {
  return JSON.stringify({ t, lion });
}
