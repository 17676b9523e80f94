/**
 * Software rasterizer over an RGB byte buffer: rectangles, lines, convex
 * polygon fill with optional alpha, and 5x7 bitmap text. Everything is
 * integer-pixel deterministic.
 */

import { GLYPH_HEIGHT, GLYPH_WIDTH, glyphFor } from "./font.js";

export type Color = readonly [number, number, number];

export const WHITE: Color = [255, 255, 255];
export const BLACK: Color = [0, 0, 0];
export const GREY: Color = [130, 130, 130];
export const LIGHT_GREY: Color = [210, 210, 210];

export class Canvas {
  readonly width: number;
  readonly height: number;
  readonly data: Uint8Array;

  constructor(width: number, height: number, background: Color = WHITE) {
    this.width = width;
    this.height = height;
    this.data = new Uint8Array(width * height * 3);
    for (let i = 0; i < width * height; i++) {
      this.data[3 * i] = background[0];
      this.data[3 * i + 1] = background[1];
      this.data[3 * i + 2] = background[2];
    }
  }

  set(x: number, y: number, color: Color, alpha = 1): void {
    x = Math.round(x);
    y = Math.round(y);
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) return;
    const i = 3 * (y * this.width + x);
    if (alpha >= 1) {
      this.data[i] = color[0];
      this.data[i + 1] = color[1];
      this.data[i + 2] = color[2];
    } else {
      this.data[i] = Math.round(alpha * color[0] + (1 - alpha) * this.data[i]);
      this.data[i + 1] = Math.round(alpha * color[1] + (1 - alpha) * this.data[i + 1]);
      this.data[i + 2] = Math.round(alpha * color[2] + (1 - alpha) * this.data[i + 2]);
    }
  }

  get(x: number, y: number): Color {
    const i = 3 * (y * this.width + x);
    return [this.data[i], this.data[i + 1], this.data[i + 2]];
  }

  fillRect(x0: number, y0: number, w: number, h: number, color: Color, alpha = 1): void {
    const xa = Math.max(0, Math.round(x0));
    const ya = Math.max(0, Math.round(y0));
    const xb = Math.min(this.width, Math.round(x0 + w));
    const yb = Math.min(this.height, Math.round(y0 + h));
    for (let y = ya; y < yb; y++) {
      for (let x = xa; x < xb; x++) {
        this.set(x, y, color, alpha);
      }
    }
  }

  line(x0: number, y0: number, x1: number, y1: number, color: Color, thickness = 1): void {
    const steps = Math.max(Math.abs(x1 - x0), Math.abs(y1 - y0), 1) * 2;
    const r = thickness / 2;
    for (let s = 0; s <= steps; s++) {
      const t = s / steps;
      const cx = x0 + t * (x1 - x0);
      const cy = y0 + t * (y1 - y0);
      if (thickness <= 1) {
        this.set(cx, cy, color);
      } else {
        for (let dy = Math.floor(-r); dy <= Math.ceil(r); dy++) {
          for (let dx = Math.floor(-r); dx <= Math.ceil(r); dx++) {
            if (dx * dx + dy * dy <= r * r + 0.25) this.set(cx + dx, cy + dy, color);
          }
        }
      }
    }
  }

  /** Scanline fill of a convex polygon given as [x, y] pairs. */
  fillPolygon(points: ReadonlyArray<readonly [number, number]>, color: Color, alpha = 1): void {
    const ys = points.map((p) => p[1]);
    const yMin = Math.max(0, Math.floor(Math.min(...ys)));
    const yMax = Math.min(this.height - 1, Math.ceil(Math.max(...ys)));
    for (let y = yMin; y <= yMax; y++) {
      const xs: number[] = [];
      for (let i = 0; i < points.length; i++) {
        const [x0, y0] = points[i];
        const [x1, y1] = points[(i + 1) % points.length];
        if (y0 === y1) continue;
        const t = (y + 0.5 - y0) / (y1 - y0);
        if (t >= 0 && t < 1) xs.push(x0 + t * (x1 - x0));
      }
      xs.sort((a, b) => a - b);
      for (let k = 0; k + 1 < xs.length; k += 2) {
        const xa = Math.max(0, Math.round(xs[k]));
        const xb = Math.min(this.width - 1, Math.round(xs[k + 1]));
        for (let x = xa; x <= xb; x++) this.set(x, y, color, alpha);
      }
    }
  }

  text(x: number, y: number, label: string, color: Color = BLACK, scale = 1): void {
    let cursor = Math.round(x);
    for (const ch of label) {
      const rows = glyphFor(ch);
      for (let ry = 0; ry < GLYPH_HEIGHT; ry++) {
        for (let rx = 0; rx < GLYPH_WIDTH; rx++) {
          if ((rows[ry] >> (GLYPH_WIDTH - 1 - rx)) & 1) {
            this.fillRect(cursor + rx * scale, y + ry * scale, scale, scale, color);
          }
        }
      }
      cursor += (GLYPH_WIDTH + 1) * scale;
    }
  }

  textWidth(label: string, scale = 1): number {
    return label.length * (GLYPH_WIDTH + 1) * scale - scale;
  }

  /** Centered text helper. */
  textCentered(cx: number, y: number, label: string, color: Color = BLACK, scale = 1): void {
    this.text(cx - this.textWidth(label, scale) / 2, y, label, color, scale);
  }
}
