/**
 * Isometric surface of the quality gap over (q, beta), painter's algorithm
 * back to front. The z = 0 plane is drawn as a translucent sheet interleaved
 * with the surface cells so it visibly divides the positive and negative
 * halves, and the zero contour itself is stroked in black on top.
 */

import { Grid, zeroContour } from "./grid.js";
import { BLACK, Canvas, Color, GREY } from "./raster.js";
import { divergingColor, formatTick, symmetricHalfWidth } from "./scale.js";

export interface SurfaceOptions {
  width: number;
  height: number;
  title: string;
  xLabel: string;
  yLabel: string;
  zLabel: string;
}

interface Projector {
  (u: number, v: number, z: number): [number, number];
}

const PLANE_COLOR: Color = [120, 170, 230];

function makeProjector(width: number, height: number, zHalf: number): Projector {
  // unit square in (u, v), z in [-zHalf, zHalf] scaled to a fixed visual height
  const cx = width / 2;
  const cy = height / 2 + 14;
  const sx = width * 0.34;
  const sy = height * 0.18;
  const sz = height * 0.27;
  return (u, v, z) => {
    const zz = zHalf > 0 ? z / zHalf : 0;
    return [cx + (u - v) * sx, cy + (u + v) * sy - zz * sz];
  };
}

function darken(c: Color, f: number): Color {
  return [Math.round(c[0] * f), Math.round(c[1] * f), Math.round(c[2] * f)];
}

export function renderSurfaceInto(
  canvas: Canvas,
  grid: Grid,
  viewport: { x0: number; y0: number; width: number; height: number },
  opts: { title: string; xLabel: string; yLabel: string; zLabel: string },
): void {
  const { qs, betas, values } = grid;
  const half = symmetricHalfWidth(values.flat());
  const project = makeProjector(viewport.width, viewport.height, half);
  const at = (p: [number, number]): [number, number] => [p[0] + viewport.x0, p[1] + viewport.y0];

  const nu = qs.length;
  const nv = betas.length;
  const uOf = (i: number) => i / (nu - 1);
  const vOf = (j: number) => j / (nv - 1);

  interface Piece {
    depth: number;
    draw(): void;
  }
  const pieces: Piece[] = [];

  for (let i = 0; i + 1 < nu; i++) {
    for (let j = 0; j + 1 < nv; j++) {
      const zs = [values[i][j], values[i + 1][j], values[i + 1][j + 1], values[i][j + 1]];
      const quadUv: [number, number][] = [
        [uOf(i), vOf(j)],
        [uOf(i + 1), vOf(j)],
        [uOf(i + 1), vOf(j + 1)],
        [uOf(i), vOf(j + 1)],
      ];
      const depth = uOf(i) + vOf(j);
      // plane patch for this cell, drawn with the same depth ordering
      pieces.push({
        depth: depth - 1e-6,
        draw: () => {
          const pts = quadUv.map(([u, v]) => at(project(u, v, 0)));
          canvas.fillPolygon(pts, PLANE_COLOR, 0.25);
        },
      });
      if (zs.some((z) => Number.isNaN(z))) continue;
      const mean = (zs[0] + zs[1] + zs[2] + zs[3]) / 4;
      pieces.push({
        depth,
        draw: () => {
          const pts = quadUv.map(([u, v], k) => at(project(u, v, zs[k])));
          const fill = divergingColor(mean, half);
          canvas.fillPolygon(pts, fill, 0.95);
          const edge = darken(fill, 0.75);
          for (let k = 0; k < 4; k++) {
            const [ax, ay] = pts[k];
            const [bx, by] = pts[(k + 1) % 4];
            canvas.line(ax, ay, bx, by, edge);
          }
        },
      });
    }
  }

  pieces.sort((a, b) => b.depth - a.depth || 0).forEach((p) => p.draw());

  // zero contour lifted onto the plane, stroked last
  const uScale = (q: number) => (q - qs[0]) / (qs[nu - 1] - qs[0]);
  const vScale = (b: number) => (b - betas[0]) / (betas[nv - 1] - betas[0]);
  for (const seg of zeroContour(grid)) {
    const [ax, ay] = at(project(uScale(seg.a[0]), vScale(seg.a[1]), 0));
    const [bx, by] = at(project(uScale(seg.b[0]), vScale(seg.b[1]), 0));
    canvas.line(ax, ay, bx, by, BLACK, 2);
  }

  // axis guides along the two front edges
  const origin = at(project(0, 0, -half));
  const uEnd = at(project(1, 0, -half));
  const vEnd = at(project(0, 1, -half));
  canvas.line(origin[0], origin[1], uEnd[0], uEnd[1], GREY);
  canvas.line(origin[0], origin[1], vEnd[0], vEnd[1], GREY);
  const uMid = at(project(0.55, -0.14, -half));
  const vMid = at(project(-0.14, 0.55, -half));
  canvas.textCentered(uMid[0], uMid[1], `${opts.xLabel} ${formatTick(qs[0])}-${formatTick(qs[nu - 1])}`);
  canvas.textCentered(vMid[0], vMid[1], `${opts.yLabel} ${formatTick(betas[0])}-${formatTick(betas[nv - 1])}`);
  canvas.textCentered(viewport.x0 + viewport.width / 2, viewport.y0 + 6, opts.title);
  canvas.text(viewport.x0 + 6, viewport.y0 + 20, `${opts.zLabel} +/-${formatTick(half)}`);
}

/** One image with one viewport per input grid (the two-panel comparison). */
export function renderSurfaces(grids: { grid: Grid; title: string }[], opts: SurfaceOptions): Canvas {
  const canvas = new Canvas(opts.width, opts.height);
  const panelW = Math.floor(opts.width / grids.length);
  grids.forEach(({ grid, title }, k) => {
    renderSurfaceInto(
      canvas,
      grid,
      { x0: k * panelW, y0: 0, width: panelW, height: opts.height },
      { title, xLabel: opts.xLabel, yLabel: opts.yLabel, zLabel: opts.zLabel },
    );
  });
  return canvas;
}
