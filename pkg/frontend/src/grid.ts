/**
 * Rectangular (q, beta) grids parsed from the solver's figure CSVs, plus
 * marching-squares extraction of the zero contour of the value field.
 */

import { numeric, readCsv, requireColumns } from "./csv.js";

export interface Grid {
  /** sorted unique axis values */
  qs: number[];
  betas: number[];
  /** value[i][j] for qs[i], betas[j]; NaN marks non-interior holes */
  values: number[][];
  statuses: string[][];
}

export function readGrid(path: string, valueColumn: string): Grid {
  const table = readCsv(path);
  requireColumns(table, ["q", "beta", valueColumn, "status"], path);
  const qs = [...new Set(table.rows.map((r) => numeric(r, "q")))].sort((a, b) => a - b);
  const betas = [...new Set(table.rows.map((r) => numeric(r, "beta")))].sort((a, b) => a - b);
  const qIndex = new Map(qs.map((v, i) => [v, i]));
  const bIndex = new Map(betas.map((v, i) => [v, i]));
  const values = qs.map(() => betas.map(() => NaN));
  const statuses = qs.map(() => betas.map(() => ""));
  for (const row of table.rows) {
    const i = qIndex.get(numeric(row, "q"))!;
    const j = bIndex.get(numeric(row, "beta"))!;
    values[i][j] = numeric(row, valueColumn);
    statuses[i][j] = row["status"];
  }
  const holes = values.flat().filter((v) => Number.isNaN(v)).length;
  if (holes === qs.length * betas.length) {
    throw new Error(`${path}: grid has no usable cells`);
  }
  return { qs, betas, values, statuses };
}

export interface Segment {
  /** endpoints in (q, beta) data coordinates */
  a: [number, number];
  b: [number, number];
}

function interpolate(p0: number, p1: number, v0: number, v1: number): number {
  if (v1 === v0) return 0.5 * (p0 + p1);
  return p0 + ((0 - v0) / (v1 - v0)) * (p1 - p0);
}

/** Zero-level contour segments of the grid's value field (marching squares). */
export function zeroContour(grid: Grid): Segment[] {
  const segments: Segment[] = [];
  const { qs, betas, values } = grid;
  for (let i = 0; i + 1 < qs.length; i++) {
    for (let j = 0; j + 1 < betas.length; j++) {
      const corners = [
        { q: qs[i], b: betas[j], v: values[i][j] },
        { q: qs[i + 1], b: betas[j], v: values[i + 1][j] },
        { q: qs[i + 1], b: betas[j + 1], v: values[i + 1][j + 1] },
        { q: qs[i], b: betas[j + 1], v: values[i][j + 1] },
      ];
      if (corners.some((c) => Number.isNaN(c.v))) continue;
      const crossings: [number, number][] = [];
      for (let k = 0; k < 4; k++) {
        const c0 = corners[k];
        const c1 = corners[(k + 1) % 4];
        if ((c0.v < 0 && c1.v >= 0) || (c1.v < 0 && c0.v >= 0)) {
          crossings.push([
            interpolate(c0.q, c1.q, c0.v, c1.v),
            interpolate(c0.b, c1.b, c0.v, c1.v),
          ]);
        }
      }
      for (let k = 0; k + 1 < crossings.length; k += 2) {
        segments.push({ a: crossings[k], b: crossings[k + 1] });
      }
    }
  }
  return segments;
}
