/**
 * Axis and color scales. The quality-gap color scale is diverging and
 * centered at zero: blue tones for negative values (sharing cleans the
 * pool), yellow-to-orange tones for positive values (quality deteriorates),
 * white exactly at zero so the zero contour separates the halves visually.
 */

import type { Color } from "./raster.js";

export interface LinearScale {
  domain: [number, number];
  range: [number, number];
  map(v: number): number;
}

export function linearScale(domain: [number, number], range: [number, number]): LinearScale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 === 0 ? 1 : d1 - d0;
  return { domain, range, map: (v: number) => r0 + ((v - d0) / span) * (r1 - r0) };
}

/** Round tick positions covering the domain, at most `count` of them. */
export function ticks(domain: [number, number], count = 5): number[] {
  const [lo, hi] = domain;
  const span = hi - lo;
  if (span <= 0) return [lo];
  const rawStep = span / Math.max(count - 1, 1);
  const power = Math.pow(10, Math.floor(Math.log10(rawStep)));
  const step = [1, 2, 2.5, 5, 10].map((m) => m * power).find((s) => span / s <= count + 0.5) ?? power * 10;
  const start = Math.ceil(lo / step) * step;
  const out: number[] = [];
  for (let v = start; v <= hi + 1e-12; v += step) {
    out.push(Math.abs(v) < step * 1e-9 ? 0 : Number(v.toPrecision(12)));
  }
  return out;
}

export function formatTick(v: number): string {
  if (v === 0) return "0";
  const abs = Math.abs(v);
  if (abs >= 0.01 && abs < 1000) {
    return Number(v.toPrecision(3)).toString();
  }
  return v.toExponential(1);
}

const NEGATIVE_END: Color = [33, 68, 160]; // deep blue
const POSITIVE_END: Color = [204, 102, 17]; // deep orange
const POSITIVE_MID: Color = [245, 213, 71]; // yellow

function mix(a: Color, b: Color, t: number): Color {
  return [
    Math.round(a[0] + (b[0] - a[0]) * t),
    Math.round(a[1] + (b[1] - a[1]) * t),
    Math.round(a[2] + (b[2] - a[2]) * t),
  ];
}

/**
 * Diverging color for a value given the symmetric half-width of the domain.
 * Zero maps to white; the positive branch passes through yellow.
 */
export function divergingColor(value: number, halfWidth: number): Color {
  if (halfWidth <= 0) return [255, 255, 255];
  const t = Math.max(-1, Math.min(1, value / halfWidth));
  if (t < 0) {
    return mix([255, 255, 255], NEGATIVE_END, -t);
  }
  if (t < 0.5) {
    return mix([255, 255, 255], POSITIVE_MID, t / 0.5);
  }
  return mix(POSITIVE_MID, POSITIVE_END, (t - 0.5) / 0.5);
}

/** Symmetric color-domain half-width for a set of values. */
export function symmetricHalfWidth(values: number[]): number {
  let m = 0;
  for (const v of values) {
    if (Number.isFinite(v)) m = Math.max(m, Math.abs(v));
  }
  return m > 0 ? m : 1;
}
