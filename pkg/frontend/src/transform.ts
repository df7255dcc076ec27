// Disk <-> canvas pixel mapping and unit-disk clamping.

export interface Vec {
  x: number;
  y: number;
}

export function norm(p: Vec): number {
  return Math.hypot(p.x, p.y);
}

/** Radial clamp onto the closed unit disk (pointer outside -> boundary). */
export function clampToDisk(p: Vec): Vec {
  const r = norm(p);
  if (r <= 1.0) return p;
  return { x: p.x / r, y: p.y / r };
}

/** Maps the unit disk onto a centered circle in a canvas; y points up. */
export class DiskTransform {
  readonly cx: number;
  readonly cy: number;
  readonly radius: number;

  constructor(width: number, height: number, pad = 24) {
    this.cx = width / 2;
    this.cy = height / 2;
    this.radius = Math.max(1, Math.min(width, height) / 2 - pad);
  }

  toPixels(p: Vec): Vec {
    return { x: this.cx + p.x * this.radius, y: this.cy - p.y * this.radius };
  }

  toDisk(px: Vec): Vec {
    return { x: (px.x - this.cx) / this.radius, y: (this.cy - px.y) / this.radius };
  }
}
