/**
 * CLI:
 *   render --kind {surface|heatmap|lines} --in PATH [--in PATH2] --out PATH.png
 *
 * Optional: --title, --xlabel, --ylabel, --zlabel, --x COL, --y COL
 * (repeatable), --width, --height. Missing columns or an empty grid exit
 * nonzero with a message and write no file.
 */

import * as fs from "node:fs";
import * as path from "node:path";

import { readGrid } from "./grid.js";
import { renderHeatmap } from "./heatmap.js";
import { renderLines } from "./lines.js";
import { encodePng } from "./png.js";
import type { Canvas } from "./raster.js";
import { renderSurfaces } from "./surface.js";

export type FigureKind = "surface" | "heatmap" | "lines";

export interface FigureSpec {
  kind: FigureKind;
  inputs: string[];
  output: string;
  title?: string;
  xLabel?: string;
  yLabel?: string;
  zLabel?: string;
  xColumn?: string;
  yColumns?: string[];
  width?: number;
  height?: number;
}

const VALUE_COLUMN = "gamma_minus_q";

export function render(spec: FigureSpec): void {
  if (spec.inputs.length === 0) {
    throw new Error("at least one --in CSV is required");
  }
  let canvas: Canvas;
  if (spec.kind === "heatmap") {
    const grid = readGrid(spec.inputs[0], VALUE_COLUMN);
    canvas = renderHeatmap(grid, {
      width: spec.width ?? 760,
      height: spec.height ?? 600,
      title: spec.title ?? "QUALITY GAP AFTER SHARING",
      xLabel: spec.xLabel ?? "Q",
      yLabel: spec.yLabel ?? "BETA",
    });
  } else if (spec.kind === "surface") {
    const grids = spec.inputs.map((input) => ({
      grid: readGrid(input, VALUE_COLUMN),
      title: path.basename(input, ".csv").toUpperCase(),
    }));
    canvas = renderSurfaces(grids, {
      width: spec.width ?? 560 * grids.length,
      height: spec.height ?? 520,
      title: spec.title ?? "",
      xLabel: spec.xLabel ?? "Q",
      yLabel: spec.yLabel ?? "BETA",
      zLabel: spec.zLabel ?? "GAMMA - Q",
    });
  } else if (spec.kind === "lines") {
    canvas = renderLines(spec.inputs[0], {
      width: spec.width ?? 720,
      height: spec.height ?? 540,
      title: spec.title ?? "SHARING THRESHOLDS",
      xColumn: spec.xColumn ?? "p_R",
      yColumns: spec.yColumns ?? ["p_Sl", "p_Sh"],
      xLabel: spec.xLabel ?? (spec.xColumn ?? "p_R").toUpperCase(),
      yLabel: spec.yLabel ?? "THRESHOLD",
    });
  } else {
    throw new Error(`unknown figure kind: ${String(spec.kind)}`);
  }
  fs.writeFileSync(spec.output, encodePng(canvas.width, canvas.height, canvas.data));
}

export function parseArgs(argv: string[]): FigureSpec {
  const spec: Partial<FigureSpec> & { inputs: string[]; yColumns: string[] } = {
    inputs: [],
    yColumns: [],
  };
  for (let i = 0; i < argv.length; i++) {
    const flag = argv[i];
    const next = () => {
      i += 1;
      if (i >= argv.length) throw new Error(`flag ${flag} needs a value`);
      return argv[i];
    };
    switch (flag) {
      case "--kind":
        spec.kind = next() as FigureKind;
        break;
      case "--in":
        spec.inputs.push(next());
        break;
      case "--out":
        spec.output = next();
        break;
      case "--title":
        spec.title = next();
        break;
      case "--xlabel":
        spec.xLabel = next();
        break;
      case "--ylabel":
        spec.yLabel = next();
        break;
      case "--zlabel":
        spec.zLabel = next();
        break;
      case "--x":
        spec.xColumn = next();
        break;
      case "--y":
        spec.yColumns.push(next());
        break;
      case "--width":
        spec.width = Number(next());
        break;
      case "--height":
        spec.height = Number(next());
        break;
      default:
        throw new Error(`unknown flag: ${flag}`);
    }
  }
  if (!spec.kind || !["surface", "heatmap", "lines"].includes(spec.kind)) {
    throw new Error("--kind must be surface, heatmap, or lines");
  }
  if (!spec.output) throw new Error("--out is required");
  if (spec.inputs.length === 0) throw new Error("--in is required");
  if (spec.yColumns.length === 0) delete (spec as { yColumns?: string[] }).yColumns;
  return spec as FigureSpec;
}

export function main(argv: string[]): number {
  try {
    render(parseArgs(argv));
    return 0;
  } catch (err) {
    console.error(`render error: ${(err as Error).message}`);
    return 1;
  }
}

if (process.argv[1] && path.basename(process.argv[1]).startsWith("main")) {
  process.exit(main(process.argv.slice(2)));
}
