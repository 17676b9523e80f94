/**
 * Heatmap of the quality gap over the (q, beta) grid, with the zero contour
 * drawn explicitly in black and a diverging legend bar on the right.
 */

import { Grid, zeroContour } from "./grid.js";
import { BLACK, Canvas, GREY, LIGHT_GREY } from "./raster.js";
import {
  divergingColor,
  formatTick,
  linearScale,
  symmetricHalfWidth,
  ticks,
} from "./scale.js";

export interface HeatmapOptions {
  width: number;
  height: number;
  title: string;
  xLabel: string;
  yLabel: string;
}

const MARGIN = { left: 64, right: 96, top: 36, bottom: 52 };

export function renderHeatmap(grid: Grid, opts: HeatmapOptions): Canvas {
  const canvas = new Canvas(opts.width, opts.height);
  const plotW = opts.width - MARGIN.left - MARGIN.right;
  const plotH = opts.height - MARGIN.top - MARGIN.bottom;
  const { qs, betas, values } = grid;

  const xDomain: [number, number] = [qs[0], qs[qs.length - 1]];
  const yDomain: [number, number] = [betas[0], betas[betas.length - 1]];
  const x = linearScale(xDomain, [MARGIN.left, MARGIN.left + plotW]);
  const y = linearScale(yDomain, [MARGIN.top + plotH, MARGIN.top]); // beta grows upward
  const half = symmetricHalfWidth(values.flat());

  // cell extents: midpoints between neighbouring axis values
  const edges = (axis: number[]): number[] => {
    const e = [axis[0] - (axis[1] - axis[0]) / 2];
    for (let i = 0; i + 1 < axis.length; i++) e.push((axis[i] + axis[i + 1]) / 2);
    e.push(axis[axis.length - 1] + (axis[axis.length - 1] - axis[axis.length - 2]) / 2);
    return e;
  };
  const qEdges = edges(qs);
  const bEdges = edges(betas);

  for (let i = 0; i < qs.length; i++) {
    for (let j = 0; j < betas.length; j++) {
      const v = values[i][j];
      const x0 = x.map(Math.max(qEdges[i], xDomain[0]));
      const x1 = x.map(Math.min(qEdges[i + 1], xDomain[1]));
      const y1 = y.map(Math.max(bEdges[j], yDomain[0]));
      const y0 = y.map(Math.min(bEdges[j + 1], yDomain[1]));
      const color = Number.isNaN(v) ? LIGHT_GREY : divergingColor(v, half);
      canvas.fillRect(x0, y0, x1 - x0 + 1, y1 - y0 + 1, color);
    }
  }

  for (const seg of zeroContour(grid)) {
    canvas.line(x.map(seg.a[0]), y.map(seg.a[1]), x.map(seg.b[0]), y.map(seg.b[1]), BLACK, 2);
  }

  // frame and ticks
  canvas.line(MARGIN.left, MARGIN.top, MARGIN.left, MARGIN.top + plotH, BLACK);
  canvas.line(MARGIN.left, MARGIN.top + plotH, MARGIN.left + plotW, MARGIN.top + plotH, BLACK);
  for (const t of ticks(xDomain)) {
    const px = x.map(t);
    canvas.line(px, MARGIN.top + plotH, px, MARGIN.top + plotH + 4, BLACK);
    canvas.textCentered(px, MARGIN.top + plotH + 8, formatTick(t));
  }
  for (const t of ticks(yDomain)) {
    const py = y.map(t);
    canvas.line(MARGIN.left - 4, py, MARGIN.left, py, BLACK);
    canvas.text(MARGIN.left - 8 - canvas.textWidth(formatTick(t)), py - 3, formatTick(t));
  }
  canvas.textCentered(MARGIN.left + plotW / 2, opts.height - 14, opts.xLabel);
  canvas.text(8, MARGIN.top - 4, opts.yLabel);
  canvas.textCentered(opts.width / 2, 12, opts.title, BLACK, 2);

  // legend bar with the zero point marked
  const legendX = opts.width - MARGIN.right + 28;
  const legendH = plotH - 20;
  const legendY = MARGIN.top + 10;
  for (let i = 0; i < legendH; i++) {
    const v = half * (1 - (2 * i) / (legendH - 1));
    canvas.fillRect(legendX, legendY + i, 16, 1, divergingColor(v, half));
  }
  canvas.fillRect(legendX - 3, legendY + (legendH - 1) / 2, 22, 1, BLACK);
  canvas.text(legendX + 20, legendY - 3, `+${formatTick(half)}`);
  canvas.text(legendX + 20, legendY + (legendH - 1) / 2 - 3, "0");
  canvas.text(legendX + 20, legendY + legendH - 4, `-${formatTick(half)}`);
  canvas.fillRect(legendX, legendY, 16, 1, GREY);
  canvas.fillRect(legendX, legendY + legendH - 1, 16, 1, GREY);
  return canvas;
}
