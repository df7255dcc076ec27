// Canvas rendering: the disk, both players, and the antipodal hint.

import { ArenaState } from "./session.js";
import { DiskTransform } from "./transform.js";

export function drawArena(
  ctx: CanvasRenderingContext2D,
  tr: DiskTransform,
  state: ArenaState | null,
  status: string,
) {
  const w = ctx.canvas.width;
  const h = ctx.canvas.height;
  ctx.clearRect(0, 0, w, h);

  ctx.strokeStyle = "#888";
  ctx.lineWidth = 2;
  ctx.beginPath();
  ctx.arc(tr.cx, tr.cy, tr.radius, 0, 2 * Math.PI);
  ctx.stroke();

  if (!state) return;

  const lion = tr.toPixels({ x: state.lion[0], y: state.lion[1] });
  const man = tr.toPixels({ x: state.man[0], y: state.man[1] });

  // antipodal hint once the lion nears the rim
  const lionNorm = Math.hypot(state.lion[0], state.lion[1]);
  if (lionNorm >= 0.8) {
    const anti = tr.toPixels({ x: -state.lion[0] / lionNorm, y: -state.lion[1] / lionNorm });
    ctx.strokeStyle = "rgba(60,120,255,0.35)";
    ctx.lineWidth = 1;
    ctx.setLineDash([6, 6]);
    ctx.beginPath();
    ctx.moveTo(lion.x, lion.y);
    ctx.lineTo(anti.x, anti.y);
    ctx.stroke();
    ctx.setLineDash([]);
  }

  ctx.fillStyle = status === "captured" ? "#c0392b" : "#e67e22";
  ctx.beginPath();
  ctx.arc(lion.x, lion.y, 9, 0, 2 * Math.PI);
  ctx.fill();

  ctx.fillStyle = "#2980b9";
  ctx.beginPath();
  ctx.arc(man.x, man.y, 7, 0, 2 * Math.PI);
  ctx.fill();
}
