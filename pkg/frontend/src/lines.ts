/**
 * Line chart for threshold sweeps: one x column against one or more y
 * columns from a sweep CSV (e.g. the two sharing thresholds against the
 * receiver's worldview).
 */

import { numeric, readCsv, requireColumns } from "./csv.js";
import { BLACK, Canvas, Color, GREY } from "./raster.js";
import { formatTick, linearScale, ticks } from "./scale.js";

export interface LinesOptions {
  width: number;
  height: number;
  title: string;
  xColumn: string;
  yColumns: string[];
  xLabel: string;
  yLabel: string;
}

const SERIES_COLORS: Color[] = [
  [33, 68, 160],
  [204, 102, 17],
  [34, 120, 60],
  [140, 40, 130],
];

const MARGIN = { left: 64, right: 24, top: 36, bottom: 52 };

export function renderLines(path: string, opts: LinesOptions): Canvas {
  const table = readCsv(path);
  requireColumns(table, [opts.xColumn, ...opts.yColumns], path);
  const rows = [...table.rows].sort(
    (a, b) => numeric(a, opts.xColumn) - numeric(b, opts.xColumn),
  );
  const xs = rows.map((r) => numeric(r, opts.xColumn));
  const series = opts.yColumns.map((c) => rows.map((r) => numeric(r, c)));

  const canvas = new Canvas(opts.width, opts.height);
  const plotW = opts.width - MARGIN.left - MARGIN.right;
  const plotH = opts.height - MARGIN.top - MARGIN.bottom;
  const finite = series.flat().filter(Number.isFinite);
  const yLo = Math.min(...finite);
  const yHi = Math.max(...finite);
  const pad = (yHi - yLo || 1) * 0.08;
  const x = linearScale([xs[0], xs[xs.length - 1]], [MARGIN.left, MARGIN.left + plotW]);
  const y = linearScale([yLo - pad, yHi + pad], [MARGIN.top + plotH, MARGIN.top]);

  canvas.line(MARGIN.left, MARGIN.top, MARGIN.left, MARGIN.top + plotH, BLACK);
  canvas.line(MARGIN.left, MARGIN.top + plotH, MARGIN.left + plotW, MARGIN.top + plotH, BLACK);
  for (const t of ticks(x.domain)) {
    const px = x.map(t);
    canvas.line(px, MARGIN.top + plotH, px, MARGIN.top + plotH + 4, BLACK);
    canvas.textCentered(px, MARGIN.top + plotH + 8, formatTick(t));
  }
  for (const t of ticks(y.domain)) {
    const py = y.map(t);
    canvas.line(MARGIN.left - 4, py, MARGIN.left, py, BLACK);
    canvas.text(MARGIN.left - 8 - canvas.textWidth(formatTick(t)), py - 3, formatTick(t));
    canvas.line(MARGIN.left, py, MARGIN.left + plotW, py, [235, 235, 235]);
  }

  series.forEach((values, s) => {
    const color = SERIES_COLORS[s % SERIES_COLORS.length];
    for (let i = 0; i + 1 < values.length; i++) {
      if (!Number.isFinite(values[i]) || !Number.isFinite(values[i + 1])) continue;
      canvas.line(x.map(xs[i]), y.map(values[i]), x.map(xs[i + 1]), y.map(values[i + 1]), color, 2);
    }
    const legendY = MARGIN.top + 6 + 12 * s;
    canvas.fillRect(MARGIN.left + plotW - 86, legendY + 2, 14, 3, color);
    canvas.text(MARGIN.left + plotW - 68, legendY, opts.yColumns[s]);
  });

  canvas.textCentered(MARGIN.left + plotW / 2, opts.height - 14, opts.xLabel);
  canvas.text(8, MARGIN.top - 4, opts.yLabel);
  canvas.textCentered(opts.width / 2, 12, opts.title, BLACK, 2);
  canvas.line(MARGIN.left, MARGIN.top, MARGIN.left + plotW, MARGIN.top, GREY);
  return canvas;
}
