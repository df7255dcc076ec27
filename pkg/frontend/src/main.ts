// App wiring: pointer -> session ticks -> server frames -> canvas.

import { drawArena } from "./arena.js";
import { SessionClient } from "./session.js";
import { DiskTransform } from "./transform.js";

const canvas = document.getElementById("arena") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const banner = document.getElementById("banner")!;
const distEl = document.getElementById("dist")!;
const urlInput = document.getElementById("server") as HTMLInputElement;
const connectBtn = document.getElementById("connect") as HTMLButtonElement;
const capInput = document.getElementById("speedcap") as HTMLInputElement;

const tr = new DiskTransform(canvas.width, canvas.height);
let client: SessionClient | null = null;

function render() {
  drawArena(ctx, tr, client?.state ?? null, client?.status ?? "idle");
  if (client?.state) {
    distEl.textContent = `distance ${client.state.dist.toFixed(4)}  t=${client.state.t.toFixed(2)}`;
  }
}

function showBanner(text: string, tone: "info" | "error") {
  banner.textContent = text;
  banner.className = tone;
  banner.style.display = text ? "block" : "none";
}

async function connect() {
  client?.stop();
  const cap = capInput.value.trim();
  client = new SessionClient({
    baseUrl: urlInput.value.replace(/\/$/, ""),
    speedCap: cap === "" ? null : Number(cap),
  });
  client.onFrame = render;
  client.onStatus = (status, detail) => {
    if (status === "captured") showBanner("captured! reconnect to play again", "info");
    else if (status === "disconnected") showBanner(`disconnected${detail ? ": " + detail : ""} - press connect to retry`, "error");
    else if (status === "playing") showBanner("", "info");
    render();
  };
  try {
    await client.connect();
    client.start();
  } catch (err) {
    showBanner(`connect failed: ${err instanceof Error ? err.message : err}`, "error");
  }
  render();
}

connectBtn.addEventListener("click", () => void connect());

canvas.addEventListener("pointermove", (ev) => {
  if (!client) return;
  const rect = canvas.getBoundingClientRect();
  client.setPointer(tr.toDisk({ x: ev.clientX - rect.left, y: ev.clientY - rect.top }));
});
canvas.addEventListener("pointerdown", (ev) => {
  canvas.setPointerCapture(ev.pointerId);
});

render();
showBanner("press connect to start a session", "info");
